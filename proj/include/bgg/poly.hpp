// Sparse multivariate polynomials with exact rational coefficients.

#pragma once

#include <map>
#include <string>
#include <vector>

#include "bgg/monomial.hpp"
#include "bgg/rational.hpp"

namespace bgg {

class Poly {
 public:
  using TermMap = std::map<Monomial, Rational, GrlexLess>;

  Poly() = default;                 // zero polynomial in 0 variables (unusable)
  explicit Poly(int n) : n_(n) {}   // zero polynomial in n variables

  static Poly constant(int n, const Rational& c);
  static Poly variable(int n, int i);  // x_{i+1}, 0-based index
  static Poly monomial(const Monomial& m, const Rational& c);

  int nvars() const { return n_; }
  bool is_zero() const { return terms_.empty(); }
  /// Total degree; -1 for the zero polynomial.
  int degree() const;
  const TermMap& terms() const { return terms_; }

  /// Coefficient of m (zero if absent).
  const Rational& coeff(const Monomial& m) const;
  void set_coeff(const Monomial& m, const Rational& c);
  void add_term(const Monomial& m, const Rational& c);

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator-() const;
  Poly operator*(const Poly& o) const;
  Poly operator*(const Rational& c) const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  bool operator==(const Poly& o) const;
  bool operator!=(const Poly& o) const { return !(*this == o); }

  /// d/dx_{axis+1}, 0-based axis.
  Poly derivative(int axis) const;
  /// Multiply by x_{axis+1}.
  Poly mul_variable(int axis) const;

  /// Homogeneous part of total degree d (zero polynomial if none).
  Poly homogeneous_part(int d) const;
  /// All nonzero homogeneous parts as (degree, part), ascending degree.
  std::vector<std::pair<int, Poly>> homogeneous_components() const;

  /// Value at the origin (the constant coefficient).
  Rational eval_zero() const;

  std::string to_string() const;

 private:
  int n_ = 0;
  TermMap terms_;
};

}  // namespace bgg
