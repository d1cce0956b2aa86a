// Monomials in n variables and deterministic monomial bases.
//
// The fixed term order everywhere in this library is graded lexicographic:
// lower total degree first; within a degree, exponent vectors compare
// lexicographically with earlier variables dominant and the larger vector
// first (so for n = 2: 1, x1, x2, x1^2, x1*x2, x2^2, ...).

#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace bgg {

struct Monomial {
  std::vector<std::uint32_t> exp;  // exponent per variable

  Monomial() = default;
  explicit Monomial(int n) : exp(static_cast<std::size_t>(n), 0) {}
  explicit Monomial(std::vector<std::uint32_t> e) : exp(std::move(e)) {}

  int nvars() const { return static_cast<int>(exp.size()); }
  unsigned degree() const;
  Monomial operator*(const Monomial& o) const;
  bool operator==(const Monomial& o) const { return exp == o.exp; }
  bool operator!=(const Monomial& o) const { return exp != o.exp; }

  /// "1" or e.g. "x1^2*x3".
  std::string to_string() const;
};

/// Graded lexicographic strict order (see file comment for the tie-break).
struct GrlexLess {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

enum class BasisMode { Homogeneous, UpTo };

/// All monomials of degree exactly r (Homogeneous) or at most r (UpTo),
/// listed in the fixed graded lexicographic order. r < 0 yields an empty list.
std::vector<Monomial> monomial_basis(int n, int r, BasisMode mode);

/// dim of the homogeneous polynomials of degree r in n variables: C(n+r-1, r).
std::size_t dim_homogeneous(int n, int r);
/// dim of polynomials of degree at most r in n variables: C(n+r, r).
std::size_t dim_up_to(int n, int r);

}  // namespace bgg
