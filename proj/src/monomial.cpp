#include "bgg/monomial.hpp"

#include <numeric>
#include <stdexcept>

namespace bgg {

unsigned Monomial::degree() const {
  return std::accumulate(exp.begin(), exp.end(), 0u);
}

Monomial Monomial::operator*(const Monomial& o) const {
  if (exp.size() != o.exp.size())
    throw std::invalid_argument("monomial variable-count mismatch");
  Monomial r(*this);
  for (std::size_t i = 0; i < exp.size(); ++i) r.exp[i] += o.exp[i];
  return r;
}

std::string Monomial::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < exp.size(); ++i) {
    if (exp[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += "x" + std::to_string(i + 1);
    if (exp[i] > 1) s += "^" + std::to_string(exp[i]);
  }
  return s.empty() ? "1" : s;
}

bool GrlexLess::operator()(const Monomial& a, const Monomial& b) const {
  const unsigned da = a.degree(), db = b.degree();
  if (da != db) return da < db;
  // Within a degree: lexicographically larger exponent vector comes first.
  return a.exp > b.exp;
}

namespace {

void enumerate_homogeneous(int n, int var, unsigned remaining, Monomial& cur,
                           std::vector<Monomial>& out) {
  if (var == n - 1) {
    cur.exp[static_cast<std::size_t>(var)] = remaining;
    out.push_back(cur);
    cur.exp[static_cast<std::size_t>(var)] = 0;
    return;
  }
  // Descending first exponent gives the lex-descending tie-break order.
  for (unsigned e = remaining; e + 1 > 0; --e) {
    cur.exp[static_cast<std::size_t>(var)] = e;
    enumerate_homogeneous(n, var + 1, remaining - e, cur, out);
    if (e == 0) break;
  }
  cur.exp[static_cast<std::size_t>(var)] = 0;
}

}  // namespace

std::vector<Monomial> monomial_basis(int n, int r, BasisMode mode) {
  if (n <= 0) throw std::invalid_argument("monomial_basis: need n >= 1");
  std::vector<Monomial> out;
  if (r < 0) return out;
  Monomial cur(n);
  const int lo = (mode == BasisMode::Homogeneous) ? r : 0;
  for (int d = lo; d <= r; ++d)
    enumerate_homogeneous(n, 0, static_cast<unsigned>(d), cur, out);
  return out;
}

namespace {
std::size_t binom(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}
}  // namespace

std::size_t dim_homogeneous(int n, int r) {
  if (r < 0 || n <= 0) return 0;
  return binom(static_cast<std::size_t>(n + r - 1), static_cast<std::size_t>(r));
}

std::size_t dim_up_to(int n, int r) {
  if (r < 0 || n <= 0) return 0;
  return binom(static_cast<std::size_t>(n + r), static_cast<std::size_t>(r));
}

}  // namespace bgg
