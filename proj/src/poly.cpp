#include "bgg/poly.hpp"

#include <stdexcept>

namespace bgg {

namespace {
const Rational kZero{0};

void check_same_vars(const Poly& a, const Poly& b) {
  if (a.nvars() != b.nvars())
    throw std::invalid_argument("polynomial variable-count mismatch");
}
}  // namespace

Poly Poly::constant(int n, const Rational& c) {
  Poly p(n);
  p.add_term(Monomial(n), c);
  return p;
}

Poly Poly::variable(int n, int i) {
  if (i < 0 || i >= n) throw std::invalid_argument("variable index out of range");
  Monomial m(n);
  m.exp[static_cast<std::size_t>(i)] = 1;
  return monomial(m, Rational(1));
}

Poly Poly::monomial(const Monomial& m, const Rational& c) {
  Poly p(m.nvars());
  p.add_term(m, c);
  return p;
}

int Poly::degree() const {
  if (terms_.empty()) return -1;
  // Terms are graded, so the last term has the maximal total degree.
  return static_cast<int>(terms_.rbegin()->first.degree());
}

const Rational& Poly::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? kZero : it->second;
}

void Poly::set_coeff(const Monomial& m, const Rational& c) {
  if (m.nvars() != n_) throw std::invalid_argument("monomial/polynomial mismatch");
  if (c == 0)
    terms_.erase(m);
  else
    terms_[m] = c;
}

void Poly::add_term(const Monomial& m, const Rational& c) {
  if (m.nvars() != n_) throw std::invalid_argument("monomial/polynomial mismatch");
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Poly Poly::operator+(const Poly& o) const {
  Poly r(*this);
  r += o;
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  check_same_vars(*this, o);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Poly Poly::operator-(const Poly& o) const {
  Poly r(*this);
  r -= o;
  return r;
}

Poly& Poly::operator-=(const Poly& o) {
  check_same_vars(*this, o);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Poly Poly::operator-() const {
  Poly r(n_);
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

Poly Poly::operator*(const Poly& o) const {
  check_same_vars(*this, o);
  Poly r(n_);
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : o.terms_) r.add_term(ma * mb, ca * cb);
  return r;
}

Poly Poly::operator*(const Rational& c) const {
  Poly r(n_);
  if (c == 0) return r;
  for (const auto& [m, q] : terms_) r.terms_.emplace(m, q * c);
  return r;
}

bool Poly::operator==(const Poly& o) const {
  return n_ == o.n_ && terms_ == o.terms_;
}

Poly Poly::derivative(int axis) const {
  if (axis < 0 || axis >= n_) throw std::invalid_argument("axis out of range");
  Poly r(n_);
  for (const auto& [m, c] : terms_) {
    const auto e = m.exp[static_cast<std::size_t>(axis)];
    if (e == 0) continue;
    Monomial d(m);
    d.exp[static_cast<std::size_t>(axis)] = e - 1;
    r.add_term(d, c * Rational(e));
  }
  return r;
}

Poly Poly::mul_variable(int axis) const {
  if (axis < 0 || axis >= n_) throw std::invalid_argument("axis out of range");
  Poly r(n_);
  for (const auto& [m, c] : terms_) {
    Monomial u(m);
    u.exp[static_cast<std::size_t>(axis)] += 1;
    r.terms_.emplace(u, c);
  }
  return r;
}

Poly Poly::homogeneous_part(int d) const {
  Poly r(n_);
  if (d < 0) return r;
  for (const auto& [m, c] : terms_)
    if (static_cast<int>(m.degree()) == d) r.terms_.emplace(m, c);
  return r;
}

std::vector<std::pair<int, Poly>> Poly::homogeneous_components() const {
  std::vector<std::pair<int, Poly>> out;
  for (const auto& [m, c] : terms_) {
    const int d = static_cast<int>(m.degree());
    if (out.empty() || out.back().first != d) out.emplace_back(d, Poly(n_));
    out.back().second.terms_.emplace(m, c);
  }
  return out;
}

Rational Poly::eval_zero() const { return coeff(Monomial(n_)); }

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [m, c] : terms_) {
    if (!s.empty()) s += " + ";
    if (m.degree() == 0) {
      s += rational_to_string(c);
    } else if (c == 1) {
      s += m.to_string();
    } else if (c == -1) {
      s += "-" + m.to_string();
    } else {
      s += rational_to_string(c) + "*" + m.to_string();
    }
  }
  return s;
}

}  // namespace bgg
