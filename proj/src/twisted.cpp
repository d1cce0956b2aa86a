#include "bgg/twisted.hpp"

#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "bgg/derham.hpp"

namespace bgg {

bool TwistedElement::is_zero() const {
  for (const auto& f : comp)
    if (!f.is_zero()) return false;
  return true;
}

TwistedElement TwistedElement::operator+(const TwistedElement& o) const {
  if (degree != o.degree || comp.size() != o.comp.size())
    throw std::invalid_argument("twisted element shape mismatch");
  TwistedElement r{degree, {}};
  r.comp.reserve(comp.size());
  for (std::size_t j = 0; j < comp.size(); ++j) r.comp.push_back(comp[j] + o.comp[j]);
  return r;
}

TwistedElement TwistedElement::operator-(const TwistedElement& o) const {
  return *this + (-o);
}

TwistedElement TwistedElement::operator-() const {
  TwistedElement r{degree, {}};
  r.comp.reserve(comp.size());
  for (const auto& f : comp) r.comp.push_back(-f);
  return r;
}

TwistedElement TwistedElement::operator*(const Rational& c) const {
  TwistedElement r{degree, {}};
  r.comp.reserve(comp.size());
  for (const auto& f : comp) r.comp.push_back(f * c);
  return r;
}

bool TwistedElement::operator==(const TwistedElement& o) const {
  return degree == o.degree && comp == o.comp;
}

std::string TwistedElement::to_string() const {
  std::ostringstream os;
  os << "degree " << degree;
  for (std::size_t j = 0; j < comp.size(); ++j)
    os << "\n  row " << j << ": " << comp[j].to_string();
  return os.str();
}

TwistedElement zero_twisted(const DiagramSpec& D, int degree) {
  TwistedElement r{degree, {}};
  r.comp.reserve(D.row_value.size());
  for (ValueTag v : D.row_value) r.comp.emplace_back(D.n, degree, v);
  return r;
}

void check_element(const DiagramSpec& D, const TwistedElement& u) {
  if (static_cast<int>(u.comp.size()) != D.rows())
    throw std::invalid_argument("twisted element: wrong number of rows");
  if (u.degree < 0) throw std::invalid_argument("twisted element: negative degree");
  for (int j = 0; j < D.rows(); ++j) {
    if (u.comp[j].n() != D.n || u.comp[j].k() != u.degree ||
        u.comp[j].value() != D.row_value[j])
      throw std::invalid_argument("twisted element: component shape mismatch");
  }
}

TwistedElement s_apply(const DiagramSpec& D, const TwistedElement& u) {
  check_element(D, u);
  const int i = u.degree;
  TwistedElement r = zero_twisted(D, i + 1);
  if (i >= D.n) return r;  // degree-(n+1) forms vanish identically
  for (int g = 0; g + 1 < D.rows(); ++g)
    r.comp[g] = apply_slot_map(D.s_form[i][g], u.comp[g + 1], i + 1, D.row_value[g]);
  return r;
}

TwistedElement t_apply(const DiagramSpec& D, const TwistedElement& u) {
  check_element(D, u);
  const int i = u.degree;
  if (i == 0) throw std::invalid_argument("t_apply: no degree below 0");
  TwistedElement r = zero_twisted(D, i - 1);
  if (i - 1 >= D.n) return r;  // source was identically zero
  for (int g = 0; g + 1 < D.rows(); ++g)
    r.comp[g + 1] = apply_slot_map(D.t_form[i - 1][g], u.comp[g], i - 1, D.row_value[g + 1]);
  return r;
}

TwistedElement d_componentwise(const DiagramSpec& D, const TwistedElement& u) {
  check_element(D, u);
  TwistedElement r{u.degree + 1, {}};
  r.comp.reserve(u.comp.size());
  for (const auto& f : u.comp) r.comp.push_back(exterior_d(f));
  return r;
}

TwistedElement koszul_componentwise(const DiagramSpec& D, const TwistedElement& u) {
  check_element(D, u);
  if (u.degree == 0)
    throw std::invalid_argument("koszul_componentwise: undefined on degree 0");
  TwistedElement r{u.degree - 1, {}};
  r.comp.reserve(u.comp.size());
  for (const auto& f : u.comp) r.comp.push_back(koszul_poincare(f));
  return r;
}

TwistedElement twisted_d(const DiagramSpec& D, const TwistedElement& u) {
  return d_componentwise(D, u) - s_apply(D, u);
}

namespace {

/// P S: raises the row-support floor by one, hence nilpotent of order <= rows.
TwistedElement ps_apply(const DiagramSpec& D, const TwistedElement& u) {
  TwistedElement su = s_apply(D, u);
  if (su.is_zero()) return zero_twisted(D, u.degree);
  return koszul_componentwise(D, su);
}

}  // namespace

TwistedElement f_iso(const DiagramSpec& D, const TwistedElement& u, Direction dir) {
  check_element(D, u);
  if (dir == Direction::Inverse) return u - ps_apply(D, u);
  // S moves row g+1 to row g and P keeps rows, so (P S)^l vanishes once l
  // reaches the row count; run to that fixed bound for deterministic cost.
  TwistedElement acc = u;
  TwistedElement term = u;
  for (int l = 1; l < D.rows(); ++l) {
    term = ps_apply(D, term);
    acc = acc + term;
  }
  return acc;
}

TwistedElement twisted_poincare(const DiagramSpec& D, const TwistedElement& u) {
  check_element(D, u);
  if (u.degree == 0)
    throw std::invalid_argument("twisted_poincare: undefined on degree 0");
  TwistedElement w = f_iso(D, u, Direction::Inverse);
  return f_iso(D, koszul_componentwise(D, w), Direction::Forward);
}

TwistedElement proj_upsilon(const DiagramSpec& D, const TwistedElement& u) {
  check_element(D, u);
  TwistedElement r = u - t_apply(D, s_apply(D, u));
  if (u.degree > 0) r = r - s_apply(D, t_apply(D, u));
  return r;
}

bool in_upsilon(const DiagramSpec& D, const TwistedElement& u) {
  return proj_upsilon(D, u) == u;
}

nlohmann::json twisted_to_json(const TwistedElement& u) {
  nlohmann::json j;
  j["degree"] = u.degree;
  nlohmann::json comps = nlohmann::json::array();
  for (const auto& f : u.comp) comps.push_back(polyform_to_json(f));
  j["components"] = std::move(comps);
  return j;
}

TwistedElement twisted_from_json(const DiagramSpec& D, const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("degree") || !j.contains("components"))
    throw std::invalid_argument("twisted JSON: need degree and components");
  TwistedElement u{j.at("degree").get<int>(), {}};
  for (const auto& cj : j.at("components")) u.comp.push_back(polyform_from_json(cj));
  check_element(D, u);
  return u;
}

}  // namespace bgg
