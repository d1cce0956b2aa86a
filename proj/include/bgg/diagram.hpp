// Two-dimensional grids of form spaces connected by the exterior derivative
// (along form degree) and constant-coefficient algebraic maps S (down the
// rows), with S d = -d S and S o S = 0 checked at construction.
//
// A grid has rows j = 0..N, each carrying forms valued in R or V. The maps
//   S^{i,j} : (degree-i forms valued in row j) -> (degree-(i+1) forms valued in row j-1)
// are built from n constant value maps phi_c via
//   S(w (x) v) = sum_c (dx_{c+1} ^ w) (x) phi_c(v),
// which anticommutes with d automatically. At the proxy level (column-wise
// matrix convention) these realize the classical arrow families
//   (I, 2 vskw, tr), (-mskw, scal_S, 2 vskw), (iota, -mskw, I)
// for the builtin grids "hessian", "elasticity" and "divdiv".

#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "bgg/poly_form.hpp"

namespace bgg {

struct DiagramSpec {
  int n = 3;
  std::string name = "custom";
  /// Value space of each row, top row first. Restricted to R and V so that
  /// the form-level bases are orthonormal and exact pseudo-inverses use the
  /// standard inner product.
  std::vector<ValueTag> row_value;
  /// s_form[i][g] is the matrix of S from (degree i, row g+1) to
  /// (degree i+1, row g) over the form-level bases; i = 0..n-1, g = 0..N-1.
  std::vector<std::vector<LinearOp>> s_form;
  /// t_form[i][g] = pseudo-inverse of s_form[i][g].
  std::vector<std::vector<LinearOp>> t_form;

  int rows() const { return static_cast<int>(row_value.size()); }
  int slot_form_dim(int i, int j) const;
  /// Proxy value space displayed at slot (i, j) (e.g. M for V-valued 1-forms).
  ValueTag slot_proxy_tag(int i, int j) const;
  /// Proxy-level matrix of S at (form degree i, source row g+1).
  LinearOp s_proxy(int i, int g) const;
};

/// Build a two-row grid from the n value maps phi_c (each dim(V0) x dim(V1)).
DiagramSpec two_row_diagram(std::string name, int n, ValueTag top, ValueTag bottom,
                            const std::vector<LinearOp>& phi);

/// Builtin grids (n = 3): "hessian", "elasticity", "divdiv".
DiagramSpec builtin_diagram(std::string_view name);

/// Invertible change of coordinates from form-level coordinates of
/// (degree-k forms valued in `value`) to proxy components.
LinearOp proxy_iso(int n, int k, ValueTag value);

/// Apply a constant form-level matrix to a form (coefficientwise).
PolyForm apply_slot_map(const LinearOp& m, const PolyForm& u, int out_k, ValueTag out_value);

/// Throws std::invalid_argument when S does not anticommute with d, when
/// S o S != 0, or when row values are not R/V.
void validate_diagram(const DiagramSpec& D);

/// JSON: either {"name": "elasticity"} or an explicit grid
/// {"n":3, "rows":[["R","V","V","R"],["V","M","M","V"]],
///  "s_maps":[{"i":0,"j":1,"matrix":[["0","1"],...]}, ...]}
/// with proxy-level matrices in the canonical bases. Validates on load.
DiagramSpec diagram_from_json(const nlohmann::json& j);
nlohmann::json diagram_to_json(const DiagramSpec& D);

}  // namespace bgg
