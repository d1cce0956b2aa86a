#include "bgg/poly_form.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <stdexcept>

namespace bgg {

namespace {
void enumerate_subsets(int n, int k, int start, IndexMask cur,
                       std::vector<IndexMask>& out) {
  if (k == 0) {
    out.push_back(cur);
    return;
  }
  for (int i = start; i <= n - k; ++i)
    enumerate_subsets(n, k - 1, i + 1, cur | (IndexMask{1} << i), out);
}
}  // namespace

const std::vector<IndexMask>& index_sets(int n, int k) {
  static std::map<std::pair<int, int>, std::vector<IndexMask>> cache;
  const auto key = std::make_pair(n, k);
  auto it = cache.find(key);
  if (it == cache.end()) {
    std::vector<IndexMask> v;
    if (k >= 0 && k <= n) enumerate_subsets(n, k, 0, 0, v);
    it = cache.emplace(key, std::move(v)).first;
  }
  return it->second;
}

std::vector<int> mask_to_tuple(IndexMask m) {
  std::vector<int> t;
  for (int i = 0; i < 32; ++i)
    if (m & (IndexMask{1} << i)) t.push_back(i + 1);
  return t;
}

IndexMask tuple_to_mask(const std::vector<int>& onebased, int n) {
  IndexMask m = 0;
  int prev = 0;
  for (int v : onebased) {
    if (v <= prev || v > n)
      throw std::invalid_argument("index set must be strictly increasing within 1..n");
    m |= IndexMask{1} << (v - 1);
    prev = v;
  }
  return m;
}

int wedge_sign(IndexMask mask, int i, IndexMask* out) {
  const IndexMask bit = IndexMask{1} << i;
  if (mask & bit) return 0;
  // Count elements of I below i: each transposition flips the sign.
  const int below = __builtin_popcount(mask & (bit - 1));
  *out = mask | bit;
  return (below % 2 == 0) ? 1 : -1;
}

const ValueSpace& PolyForm::value_space() const { return bgg::value_space(value_, n_); }

int PolyForm::value_dim() const { return value_space().dim(); }

int PolyForm::degree() const {
  int d = -1;
  for (const auto& [key, p] : coeff_) d = std::max(d, p.degree());
  return d;
}

Poly PolyForm::coeff(IndexMask mask, int a) const {
  auto it = coeff_.find({mask, a});
  return it == coeff_.end() ? Poly(n_) : it->second;
}

void PolyForm::set_coeff(IndexMask mask, int a, const Poly& p) {
  if (a < 0 || a >= value_dim()) throw std::out_of_range("value index");
  if (p.is_zero())
    coeff_.erase({mask, a});
  else
    coeff_[{mask, a}] = p;
}

void PolyForm::add_coeff(IndexMask mask, int a, const Poly& p) {
  if (a < 0 || a >= value_dim()) throw std::out_of_range("value index");
  if (p.is_zero()) return;
  auto [it, inserted] = coeff_.emplace(std::make_pair(mask, a), p);
  if (!inserted) {
    it->second += p;
    if (it->second.is_zero()) coeff_.erase(it);
  }
}

namespace {
void check_compatible(const PolyForm& a, const PolyForm& b) {
  if (a.n() != b.n() || a.k() != b.k() || a.value() != b.value())
    throw std::invalid_argument("form type mismatch");
}
}  // namespace

PolyForm PolyForm::operator+(const PolyForm& o) const {
  PolyForm r(*this);
  r += o;
  return r;
}

PolyForm& PolyForm::operator+=(const PolyForm& o) {
  check_compatible(*this, o);
  for (const auto& [key, p] : o.coeff_) add_coeff(key.first, key.second, p);
  return *this;
}

PolyForm PolyForm::operator-(const PolyForm& o) const {
  check_compatible(*this, o);
  PolyForm r(*this);
  for (const auto& [key, p] : o.coeff_) r.add_coeff(key.first, key.second, -p);
  return r;
}

PolyForm PolyForm::operator-() const {
  PolyForm r(n_, k_, value_);
  for (const auto& [key, p] : coeff_) r.coeff_.emplace(key, -p);
  return r;
}

PolyForm PolyForm::operator*(const Rational& c) const {
  PolyForm r(n_, k_, value_);
  if (c == 0) return r;
  for (const auto& [key, p] : coeff_) r.coeff_.emplace(key, p * c);
  return r;
}

bool PolyForm::operator==(const PolyForm& o) const {
  return n_ == o.n_ && k_ == o.k_ && value_ == o.value_ && coeff_ == o.coeff_;
}

std::vector<Poly> PolyForm::coordinates() const {
  const auto& sets = index_sets(n_, k_);
  const int vd = value_dim();
  std::vector<Poly> out(sets.size() * static_cast<std::size_t>(vd), Poly(n_));
  for (std::size_t s = 0; s < sets.size(); ++s)
    for (int a = 0; a < vd; ++a) {
      auto it = coeff_.find({sets[s], a});
      if (it != coeff_.end()) out[s * static_cast<std::size_t>(vd) + a] = it->second;
    }
  return out;
}

PolyForm PolyForm::from_coordinates(int n, int k, ValueTag value,
                                    const std::vector<Poly>& coords) {
  const auto& sets = index_sets(n, k);
  PolyForm f(n, k, value);
  const int vd = f.value_dim();
  if (coords.size() != sets.size() * static_cast<std::size_t>(vd))
    throw std::invalid_argument("coordinate vector length mismatch");
  for (std::size_t s = 0; s < sets.size(); ++s)
    for (int a = 0; a < vd; ++a) {
      const auto& p = coords[s * static_cast<std::size_t>(vd) + a];
      if (!p.is_zero()) f.set_coeff(sets[s], a, p);
    }
  return f;
}

std::string PolyForm::to_string() const {
  if (coeff_.empty()) return "0";
  std::string s;
  for (const auto& mask : index_sets(n_, k_))
    for (int a = 0; a < value_dim(); ++a) {
      auto it = coeff_.find({mask, a});
      if (it == coeff_.end()) continue;
      if (!s.empty()) s += " + ";
      s += "(" + it->second.to_string() + ")";
      auto tup = mask_to_tuple(mask);
      for (int v : tup) s += " dx" + std::to_string(v);
      if (value_ != ValueTag::R) s += " [" + bgg::to_string(value_) + std::to_string(a) + "]";
    }
  return s;
}

// ---------------------------------------------------------------------------
// JSON: {"n":3,"k":1,"value":"V","terms":[{"I":[1],"a":0,"monomial":[2,0,0],
// "coeff":"3/2"}, ...]} with canonical ordering and "p" / "p/q" coefficients.

nlohmann::json polyform_to_json(const PolyForm& f) {
  nlohmann::json j;
  j["n"] = f.n();
  j["k"] = f.k();
  j["value"] = to_string(f.value());
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& mask : index_sets(f.n(), f.k()))
    for (int a = 0; a < f.value_dim(); ++a) {
      auto it = f.terms().find({mask, a});
      if (it == f.terms().end()) continue;
      for (const auto& [m, c] : it->second.terms()) {
        nlohmann::json t;
        t["I"] = mask_to_tuple(mask);
        t["a"] = a;
        t["monomial"] = m.exp;
        t["coeff"] = rational_to_string(c);
        terms.push_back(std::move(t));
      }
    }
  j["terms"] = std::move(terms);
  return j;
}

PolyForm polyform_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw std::invalid_argument("form JSON must be an object");
  const int n = j.at("n").get<int>();
  const int k = j.at("k").get<int>();
  if (n < 1 || n > 3) throw std::invalid_argument("form JSON: need 1 <= n <= 3");
  if (k < 0) throw std::invalid_argument("form JSON: need k >= 0");
  const ValueTag value = value_tag_from_string(j.at("value").get<std::string>());
  PolyForm f(n, k, value);
  (void)f.value_space();  // validates the value tag against n
  for (const auto& t : j.at("terms")) {
    const auto tup = t.at("I").get<std::vector<int>>();
    if (static_cast<int>(tup.size()) != k)
      throw std::invalid_argument("form JSON: index set size must equal k");
    const IndexMask mask = tuple_to_mask(tup, n);
    const int a = t.at("a").get<int>();
    if (a < 0 || a >= f.value_dim())
      throw std::invalid_argument("form JSON: value index out of range");
    const auto expv = t.at("monomial").get<std::vector<std::uint32_t>>();
    if (static_cast<int>(expv.size()) != n)
      throw std::invalid_argument("form JSON: monomial length must equal n");
    const Rational c = rational_from_string(t.at("coeff").get<std::string>());
    Poly p(n);
    p.add_term(Monomial(expv), c);
    f.add_coeff(mask, a, p);
  }
  return f;
}

}  // namespace bgg
