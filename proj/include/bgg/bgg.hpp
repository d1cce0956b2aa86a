// BGG complexes carved out of twisted complexes: the connecting operators
//   G = -sum_k (T d)^k T,   A = I - G d_V,   B = Proj_Upsilon (I - d_V G),
// the BGG differential  D = Proj_Upsilon d_V A  and Poincare operator
//   P_bgg = B P_V A,  plus the generic "complexify" modification
//   P~ = P - D P P  that makes a family of Poincare operators a complex.

#pragma once

#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bgg/proxy.hpp"
#include "bgg/twisted.hpp"

namespace bgg {

/// Row-raising connection G (degree >= 1): -sum_k (T d)^k T, a finite sum.
TwistedElement g_apply(const DiagramSpec& D, const TwistedElement& u);

/// A = I - G d_V  (maps Upsilon into the twisted space).
TwistedElement bgg_A(const DiagramSpec& D, const TwistedElement& u);
/// B = Proj_Upsilon (I - d_V G)  (left inverse of A on Upsilon; B A = I).
TwistedElement bgg_B(const DiagramSpec& D, const TwistedElement& u);

/// BGG differential Proj_Upsilon d_V A. Input must lie in Upsilon.
TwistedElement bgg_d(const DiagramSpec& D, const TwistedElement& u);
/// BGG Poincare operator B P_V A (degree >= 1). Input must lie in Upsilon.
TwistedElement bgg_poincare(const DiagramSpec& D, const TwistedElement& u);

/// A degree-graded family of operators: d raises degree by one, p lowers it.
/// Both receive the element and its degree.
template <typename Elem>
struct OpFamily {
  std::function<Elem(const Elem&, int)> d;
  std::function<Elem(const Elem&, int)> p;
};

/// Replace p by p~ with p~ o p~ = 0 while keeping d p~ + p~ d = I:
///   p~ = p            in degrees 0 and 1,
///   p~ = p - d(p(p))  in degrees >= 2.
/// Sampled elements (with their degrees) are used to spot-check the homotopy
/// identity precondition; a violation throws std::invalid_argument.
template <typename Elem>
OpFamily<Elem> complexify(const OpFamily<Elem>& f,
                          const std::vector<std::pair<Elem, int>>& samples = {}) {
  for (const auto& [u, i] : samples) {
    if (i <= 0) continue;
    Elem lhs = f.d(f.p(u, i), i - 1) + f.p(f.d(u, i), i + 1);
    if (!(lhs == u))
      throw std::invalid_argument("complexify: d p + p d != I on a sample element");
  }
  OpFamily<Elem> g;
  g.d = f.d;
  g.p = [f](const Elem& u, int i) {
    Elem pu = f.p(u, i);
    if (i < 2) return pu;
    return pu - f.d(f.p(pu, i - 1), i - 2);
  };
  return g;
}

/// One slot of the classical complex a grid's BGG spaces assemble into:
/// degree i lives (after projection) in row `row`, with proxies valued in
/// the subspace `proxy` of that slot's natural proxy space.
struct BGGSlot {
  int row = 0;
  ValueTag proxy = ValueTag::R;
};

struct BGGComplexDesc {
  std::string diagram;          // builtin grid name
  std::vector<BGGSlot> slots;   // one per degree 0..n
  std::vector<std::string> ops; // proxy operator names for the n arrows
};

/// Slot tables for the builtin grids:
///   hessian:    R --hess--> S --curl--> T --div--> V
///   elasticity: V --def--> S --inc--> S --div--> V
///   divdiv:     V --devgrad--> T --symcurl--> S --divdiv--> R
BGGComplexDesc bgg_complex_desc(std::string_view diagram_name);

/// Place a proxy field with values in desc.slots[degree].proxy into the
/// corresponding row of a twisted element; the result lies in Upsilon.
TwistedElement embed_in_bgg_slot(const DiagramSpec& D, const BGGComplexDesc& desc,
                                 int degree, const ProxyField& f);
/// Inverse of embed_in_bgg_slot; throws when u has support outside the slot
/// or values outside the slot's proxy subspace.
ProxyField extract_from_bgg_slot(const DiagramSpec& D, const BGGComplexDesc& desc,
                                 int degree, const TwistedElement& u);

}  // namespace bgg
