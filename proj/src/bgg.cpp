#include "bgg/bgg.hpp"

#include <stdexcept>

namespace bgg {

TwistedElement g_apply(const DiagramSpec& D, const TwistedElement& u) {
  check_element(D, u);
  if (u.degree == 0) throw std::invalid_argument("g_apply: undefined on degree 0");
  // (T d)^k T pushes support toward the bottom row, so the series is finite;
  // run to the fixed row-count bound for deterministic cost.
  TwistedElement term = t_apply(D, u);
  TwistedElement acc = term;
  for (int k = 1; k < D.rows(); ++k) {
    term = t_apply(D, d_componentwise(D, term));
    acc = acc + term;
  }
  return -acc;
}

TwistedElement bgg_A(const DiagramSpec& D, const TwistedElement& u) {
  check_element(D, u);
  return u - g_apply(D, twisted_d(D, u));
}

TwistedElement bgg_B(const DiagramSpec& D, const TwistedElement& u) {
  check_element(D, u);
  if (u.degree == 0) return proj_upsilon(D, u);
  return proj_upsilon(D, u - twisted_d(D, g_apply(D, u)));
}

TwistedElement bgg_d(const DiagramSpec& D, const TwistedElement& u) {
  if (!in_upsilon(D, u))
    throw std::invalid_argument("bgg_d: element is not in the BGG subspace");
  return proj_upsilon(D, twisted_d(D, bgg_A(D, u)));
}

TwistedElement bgg_poincare(const DiagramSpec& D, const TwistedElement& u) {
  if (u.degree == 0)
    throw std::invalid_argument("bgg_poincare: undefined on degree 0");
  if (!in_upsilon(D, u))
    throw std::invalid_argument("bgg_poincare: element is not in the BGG subspace");
  return bgg_B(D, twisted_poincare(D, bgg_A(D, u)));
}

BGGComplexDesc bgg_complex_desc(std::string_view diagram_name) {
  BGGComplexDesc d;
  d.diagram = std::string(diagram_name);
  if (diagram_name == "hessian") {
    d.slots = {{0, ValueTag::R}, {1, ValueTag::S}, {1, ValueTag::T}, {1, ValueTag::V}};
    d.ops = {"hess", "curl", "div"};
  } else if (diagram_name == "elasticity") {
    d.slots = {{0, ValueTag::V}, {0, ValueTag::S}, {1, ValueTag::S}, {1, ValueTag::V}};
    d.ops = {"def", "inc", "div"};
  } else if (diagram_name == "divdiv") {
    d.slots = {{0, ValueTag::V}, {0, ValueTag::T}, {0, ValueTag::S}, {1, ValueTag::R}};
    d.ops = {"devgrad", "symcurl", "divdiv"};
  } else {
    throw std::invalid_argument("bgg_complex_desc: unknown grid '" +
                                std::string(diagram_name) + "'");
  }
  return d;
}

TwistedElement embed_in_bgg_slot(const DiagramSpec& D, const BGGComplexDesc& desc,
                                 int degree, const ProxyField& f) {
  if (degree < 0 || degree >= static_cast<int>(desc.slots.size()))
    throw std::invalid_argument("embed_in_bgg_slot: degree out of range");
  const BGGSlot& slot = desc.slots[static_cast<std::size_t>(degree)];
  const ValueSpace& W = value_space(slot.proxy, D.n);
  if (f.n != D.n || f.kind != W.ambient)
    throw std::invalid_argument("embed_in_bgg_slot: proxy field has the wrong shape");
  if (!value_coords(W, f.comp, D.n))
    throw std::invalid_argument("embed_in_bgg_slot: field values leave the slot subspace");
  TwistedElement u = zero_twisted(D, degree);
  u.comp[static_cast<std::size_t>(slot.row)] =
      proxy_to_form(f, degree, D.row_value[static_cast<std::size_t>(slot.row)]);
  return u;
}

ProxyField extract_from_bgg_slot(const DiagramSpec& D, const BGGComplexDesc& desc,
                                 int degree, const TwistedElement& u) {
  check_element(D, u);
  if (degree != u.degree)
    throw std::invalid_argument("extract_from_bgg_slot: degree mismatch");
  if (degree < 0 || degree >= static_cast<int>(desc.slots.size()))
    throw std::invalid_argument("extract_from_bgg_slot: degree out of range");
  const BGGSlot& slot = desc.slots[static_cast<std::size_t>(degree)];
  for (int j = 0; j < D.rows(); ++j)
    if (j != slot.row && !u.comp[static_cast<std::size_t>(j)].is_zero())
      throw std::invalid_argument("extract_from_bgg_slot: support outside the slot row");
  ProxyField f = form_to_proxy(u.comp[static_cast<std::size_t>(slot.row)]);
  const ValueSpace& W = value_space(slot.proxy, D.n);
  if (!value_coords(W, f.comp, D.n))
    throw std::invalid_argument("extract_from_bgg_slot: values leave the slot subspace");
  return f;
}

}  // namespace bgg
