// Twisted complexes over a grid: elements, the twisted differential d - S,
// the nilpotent isomorphism F = sum_l (P S)^l with inverse I - P S, and the
// twisted Poincare operator P_V = F o P o F^{-1} (componentwise Koszul P).

#pragma once

#include <nlohmann/json_fwd.hpp>

#include "bgg/diagram.hpp"

namespace bgg {

/// One element of the total space at a fixed form degree: one form per row,
/// component j valued in row j's value space.
struct TwistedElement {
  int degree = 0;
  std::vector<PolyForm> comp;

  bool is_zero() const;
  TwistedElement operator+(const TwistedElement& o) const;
  TwistedElement operator-(const TwistedElement& o) const;
  TwistedElement operator-() const;
  TwistedElement operator*(const Rational& c) const;
  bool operator==(const TwistedElement& o) const;
  bool operator!=(const TwistedElement& o) const { return !(*this == o); }
  std::string to_string() const;
};

TwistedElement zero_twisted(const DiagramSpec& D, int degree);
/// Validates shapes/value tags against the grid; throws on mismatch.
void check_element(const DiagramSpec& D, const TwistedElement& u);

/// Row-lowering algebraic map: (S u)_j = S^{i, j+1} u_{j+1}.
TwistedElement s_apply(const DiagramSpec& D, const TwistedElement& u);
/// Row-raising pseudo-inverse family: (T u)_{j+1} = pinv(S^{i-1, j+1}) u_j.
/// Throws on degree-0 elements (T lowers form degree).
TwistedElement t_apply(const DiagramSpec& D, const TwistedElement& u);
/// Componentwise exterior derivative.
TwistedElement d_componentwise(const DiagramSpec& D, const TwistedElement& u);
/// Componentwise Koszul homotopy (degree >= 1).
TwistedElement koszul_componentwise(const DiagramSpec& D, const TwistedElement& u);

/// Twisted differential d_V = d - S.
TwistedElement twisted_d(const DiagramSpec& D, const TwistedElement& u);

enum class Direction { Forward, Inverse };
/// F (Forward, = sum_l (P S)^l) or its exact inverse I - P S.
TwistedElement f_iso(const DiagramSpec& D, const TwistedElement& u, Direction dir);

/// Twisted Poincare operator (degree >= 1): F o (componentwise P) o F^{-1}.
TwistedElement twisted_poincare(const DiagramSpec& D, const TwistedElement& u);

/// Orthogonal projection onto ker(S) intersect ran(S)-perp, componentwise
/// over the form-level bases: I - S T - T S.
TwistedElement proj_upsilon(const DiagramSpec& D, const TwistedElement& u);
bool in_upsilon(const DiagramSpec& D, const TwistedElement& u);

/// JSON: {"degree": i, "components": [form, form, ...]} (top row first).
nlohmann::json twisted_to_json(const TwistedElement& u);
TwistedElement twisted_from_json(const DiagramSpec& D, const nlohmann::json& j);

}  // namespace bgg
