// Seeded random generators for polynomials, fields, forms, and twisted
// elements.  All draws go through rng() % k so that streams are identical
// across standard libraries (std::uniform_int_distribution is
// implementation-defined); every consumer that freezes expected values
// depends on that.
#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

#include "bgg/diagram.hpp"
#include "bgg/poly.hpp"
#include "bgg/poly_form.hpp"
#include "bgg/proxy.hpp"
#include "bgg/twisted.hpp"
#include "bgg/value_space.hpp"

namespace bgg {

/// Uniform draw from {0, ..., k-1} (k >= 1), portable across platforms.
inline std::uint64_t pick(std::mt19937_64& rng, std::uint64_t k) {
  return rng() % k;
}

/// Nonzero integer coefficient in [-4, 4].
inline Rational random_coeff(std::mt19937_64& rng) {
  long v = static_cast<long>(pick(rng, 8)) - 4;
  if (v >= 0) ++v;
  return Rational(v);
}

/// Polynomial of degree <= degree in n variables; roughly half the monomials
/// get a nonzero small integer coefficient, and at least one term is kept.
inline Poly random_poly(std::mt19937_64& rng, int n, int degree) {
  Poly p(n);
  std::vector<Monomial> mons = monomial_basis(n, degree, BasisMode::UpTo);
  for (const Monomial& m : mons)
    if (pick(rng, 2) == 0) p += Poly::monomial(m, random_coeff(rng));
  if (p.is_zero()) p += Poly::monomial(mons[pick(rng, mons.size())], random_coeff(rng));
  return p;
}

/// Field valued in the given space with random coefficient polynomials.
inline ProxyField random_proxy(std::mt19937_64& rng, ValueTag tag, int n, int degree) {
  const ValueSpace& W = value_space(tag, n);
  std::vector<Poly> coords;
  coords.reserve(static_cast<std::size_t>(W.dim()));
  for (int b = 0; b < W.dim(); ++b) coords.push_back(random_poly(rng, n, degree));
  std::vector<Poly> amb = value_embed(W, coords, n);
  switch (W.ambient) {
    case AmbientKind::Scalar:
      return ProxyField::scalar(amb[0]);
    case AmbientKind::Vector:
      return ProxyField::vector(n, std::move(amb));
    case AmbientKind::Matrix:
      return ProxyField::matrix(n, std::move(amb));
  }
  throw std::logic_error("random_proxy: bad ambient kind");
}

/// k-form with values in `value` and random coefficients of degree <= degree.
inline PolyForm random_form(std::mt19937_64& rng, int n, int k, ValueTag value,
                            int degree) {
  const ValueSpace& W = value_space(value, n);
  std::size_t len = static_cast<std::size_t>(W.dim());
  std::vector<Poly> coords(index_sets(n, k).size() * len, Poly(n));
  for (Poly& c : coords)
    if (pick(rng, 2) == 0) c = random_poly(rng, n, degree);
  return PolyForm::from_coordinates(n, k, value, coords);
}

/// Twisted element of the given degree with random components in every row.
inline TwistedElement random_twisted(std::mt19937_64& rng, const DiagramSpec& D,
                                     int degree, int coeff_degree) {
  TwistedElement u = zero_twisted(D, degree);
  for (int j = 0; j < D.rows(); ++j)
    u.comp[static_cast<std::size_t>(j)] =
        random_form(rng, D.n, degree, D.row_value[static_cast<std::size_t>(j)],
                    coeff_degree);
  return u;
}

}  // namespace bgg
