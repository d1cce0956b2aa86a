// Proxy representation of forms as scalar / vector / matrix polynomial fields,
// and the classical differential operators acting on proxies.
//
// Convention (fixed throughout the library): the matrix proxy of a
// vector-valued k-form has the form index as its ROW and the value index as
// its COLUMN, so differential operators and integral operators act
// column-wise on matrix fields (du = grad u has (du)_{ia} = d_i u_a, and
// curl/div of a matrix field act on each column).

#pragma once

#include <string_view>
#include <vector>

#include "bgg/poly_form.hpp"

namespace bgg {

struct ProxyField {
  AmbientKind kind = AmbientKind::Scalar;
  int n = 0;
  std::vector<Poly> comp;  // 1, n, or n*n (row-major) components

  static ProxyField scalar(const Poly& p);
  static ProxyField vector(int n, std::vector<Poly> c);
  static ProxyField matrix(int n, std::vector<Poly> c);
  bool is_zero() const;
  bool operator==(const ProxyField& o) const;
  const Poly& at(int i) const { return comp[static_cast<std::size_t>(i)]; }
  const Poly& at(int i, int j) const { return comp[static_cast<std::size_t>(i * n + j)]; }
};

/// Proxy of a form (n <= 3). Defined for scalar- and vector-valued forms of
/// any degree and for matrix-valued 0-forms; throws otherwise.
ProxyField form_to_proxy(const PolyForm& f);

/// Inverse of form_to_proxy: rebuild the (n, k, value)-form whose proxy is
/// the given field. Round-trips exactly.
PolyForm proxy_to_form(const ProxyField& p, int k, ValueTag value);

/// Independent implementations of the classical operators on proxy fields:
/// grad, curl, div, def, hess, inc, divdiv, symcurl, devgrad, devhess, devdef,
/// plus the algebraic maps sym, skw, dev, tr, transpose, mskw, vskw, iota.
/// Throws std::invalid_argument when the operator does not apply to the kind.
ProxyField apply_proxy_operator(std::string_view name, const ProxyField& u);

}  // namespace bgg
