// Finite-dimensional chain complexes of rational matrices, homotopy sets
// (P, L) with d P + P d = I - L, harmonic homotopies from exact
// pseudo-inverses, seeded random complexes with cohomology known by
// construction, the subcomplex ran(L), and the P-hat / P-tilde modification
// that grants a Poincare family the complex property P~ o P~ = 0.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "bgg/linear_op.hpp"

namespace bgg {

struct FiniteComplex {
  std::vector<int> dims;    // dims[k] = dim V^k
  std::vector<LinearOp> d;  // d[k]: V^k -> V^{k+1}; size dims.size()-1

  int spaces() const { return static_cast<int>(dims.size()); }
};

/// Throws std::invalid_argument on shape mismatch or d o d != 0.
void validate_complex(const FiniteComplex& c);

/// Cohomology dimensions dim ker(d^k) - rank(d^{k-1}) per degree.
std::vector<int> cohomology_dims(const FiniteComplex& c);

int euler_characteristic(const std::vector<int>& dims);

struct HomotopySet {
  std::vector<LinearOp> P;  // P[k]: V^{k+1} -> V^k; size dims.size()-1
  std::vector<LinearOp> L;  // L[k]: V^k -> V^k;     size dims.size()
};

struct HomotopyReport {
  bool homotopy_ok = false;  // d P + P d = I - L in every degree
  bool dl_commutes = false;  // d L = L d (must follow when homotopy_ok)
  std::string detail;        // first failing identity, if any
};

/// Checks d P + P d = I - L and the consequence d L = L d.
HomotopyReport check_homotopy(const FiniteComplex& c, const HomotopySet& h);

/// P[k] = pseudo-inverse of d[k]; L becomes the orthogonal projector onto
/// the harmonic space ker(d) cap ran(d)-perp, with d L = L d = 0 and L² = L.
HomotopySet hodge_homotopy(const FiniteComplex& c);

struct SubcomplexResult {
  FiniteComplex sub;                  // W^k = ran(L^k) with the induced d
  std::vector<LinearOp> inclusion;    // basis of W^k as columns in V^k
  std::vector<int> cohomology_sub;
  std::vector<int> cohomology_full;
  bool equal = false;
};

/// Requires check_homotopy(c, h).homotopy_ok; throws otherwise.
SubcomplexResult subcomplex_from_L(const FiniteComplex& c, const HomotopySet& h);

struct RandomComplex {
  FiniteComplex c;
  std::vector<int> cohomology;  // known by construction
};

/// Deterministic in (seed, dims): a block-canonical complex with drawn
/// feasible ranks, conjugated by unimodular integer matrices.
RandomComplex random_complex(std::uint64_t seed, const std::vector<int>& dims);

/// The two-step modification: P-hat = P - P L - L P + L P L, then
/// P~ = P-hat - d P-hat P-hat. Requires (and checks exactly) the
/// preconditions d P + P d = I - L, d L = L d = 0, L² = L; the returned
/// family satisfies the same homotopy identity with the same L, plus
/// L P~ = P~ L = 0 and P~ o P~ = 0 (asserted).
HomotopySet modify_hat_tilde(const FiniteComplex& c, const HomotopySet& h);

/// JSON: {"dims":[...], "d":[[[row, col, "p/q"], ...], ...]}.
nlohmann::json complex_to_json(const FiniteComplex& c);
FiniteComplex complex_from_json(const nlohmann::json& j);

}  // namespace bgg
