// Exterior derivative, the Euler (radial) contraction, and the exact
// Poincare/Koszul homotopy operator for polynomial differential forms.
//
// Conventions fixed here:
//   - base point of the homotopy is the origin;
//   - on a homogeneous coefficient of degree r in form degree k >= 1 the
//     homotopy is 1/(r+k) times the contraction, so that
//     d P + P d = identity on k-forms for k >= 1 and P(d u) = u - u(0) on
//     0-forms;
//   - d of an n-form is the empty zero form of degree n+1.

#pragma once

#include <string>
#include <vector>

#include "bgg/poly_form.hpp"

namespace bgg {

PolyForm exterior_d(const PolyForm& u);

/// Contraction with the Euler vector field (x_1, ..., x_n) in the first slot.
/// Throws std::invalid_argument on 0-forms.
PolyForm interior_euler(const PolyForm& u);

/// The Poincare homotopy operator: degree-weighted Euler contraction.
/// Throws std::invalid_argument on 0-forms.
PolyForm koszul_poincare(const PolyForm& u);

struct DerhamCheckEntry {
  int k = 0;
  std::size_t cases = 0;
  bool pass = true;
  std::string counterexample;  // empty when pass
};

struct DerhamCheck {
  int n = 0;
  int max_degree = 0;
  std::vector<DerhamCheckEntry> entries;  // one per form degree 0..n
  bool pass = true;
};

/// Verify d P + P d = id on all monomial k-forms (k = 1..n) and
/// P(d u) = u - u(0) on all monomials (k = 0), coefficients up to max_degree.
DerhamCheck homotopy_check_derham(int n, int max_degree);

}  // namespace bgg
