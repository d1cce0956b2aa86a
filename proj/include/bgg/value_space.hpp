// Value spaces for vector- and matrix-valued fields, with fixed canonical
// bases and exact inner-product machinery (Frobenius / Euclidean).
//
// Canonical bases (ambient coordinates; matrices are row-major):
//   R  : { 1 }
//   V  : { e1, ..., en }
//   M  : { E11, E12, ..., Enn }                      (row-major)
//   S  : { Eii } then { Eij + Eji : i < j }           (symmetric)
//   K  : { Eij - Eji : i < j }                        (skew)
//   T  : off-diagonal Eij (row-major) then { E11 - Enn, ..., E(n-1)(n-1) - Enn }
//        (trace-free; note this basis is not orthogonal)
//   ST : { E12+E21, E13+E31, E23+E32, E11-E33, E22-E33 }   (n = 3 only)

#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bgg/linear_op.hpp"

namespace bgg {

enum class ValueTag { R, V, M, S, K, T, ST };

/// Levi-Civita symbol on 0-based indices (any repeated index gives 0).
int levi_civita(int i, int j, int k);

std::string to_string(ValueTag t);
ValueTag value_tag_from_string(std::string_view s);

enum class AmbientKind { Scalar, Vector, Matrix };

struct ValueSpace {
  ValueTag tag = ValueTag::R;
  int n = 0;  // spatial dimension
  AmbientKind ambient = AmbientKind::Scalar;
  /// Basis vectors in ambient coordinates (length 1, n, or n*n).
  std::vector<std::vector<Rational>> basis;
  /// Basis matrix B (ambient_dim x dim) and the exact coordinate extractor
  /// E = (B^T B)^{-1} B^T, so that B E is the orthogonal projector onto span(B).
  LinearOp B, E;

  int dim() const { return static_cast<int>(basis.size()); }
  int ambient_dim() const;
};

/// Cached canonical value space. Matrix-valued tags need n >= 2; ST needs n = 3.
const ValueSpace& value_space(ValueTag tag, int n);

/// Exact coordinates of an ambient vector in the canonical basis, or nullopt
/// when the vector is not in the span.
std::optional<std::vector<Rational>> value_coords(const ValueSpace& W,
                                                  const std::vector<Rational>& ambient);
/// Same, for vectors of polynomials (componentwise exact membership).
std::optional<std::vector<Poly>> value_coords(const ValueSpace& W,
                                              const std::vector<Poly>& ambient, int nvars);

/// Ambient vector of a coordinate vector: B * coords.
std::vector<Rational> value_embed(const ValueSpace& W, const std::vector<Rational>& coords);
std::vector<Poly> value_embed(const ValueSpace& W, const std::vector<Poly>& coords, int nvars);

/// Orthogonal projection ambient -> ambient onto the space (exact, Gram-aware).
std::vector<Rational> value_project(const ValueSpace& W, const std::vector<Rational>& ambient);
std::vector<Poly> value_project(const ValueSpace& W, const std::vector<Poly>& ambient, int nvars);

/// A linear map between two value spaces, as an exact matrix in the canonical bases.
struct ValueMap {
  ValueTag source = ValueTag::R, target = ValueTag::R;
  int n = 0;
  LinearOp matrix;  // dim(target) x dim(source)
};

/// Named algebraic maps in the canonical bases:
///   mskw : V -> M   (mskw(v) w = v x w; n = 3)
///   vskw : M -> V   (inverse of mskw after skew projection; n = 3)
///   iota : R -> M   (c -> c I)
///   tr   : M -> R
///   sym  : M -> M
///   skw  : M -> M
///   dev  : M -> M   (u - tr(u)/n I)
///   scal_S : M -> M (u -> u^T - tr(u) I)
ValueMap proxy_map(std::string_view name, int n);

}  // namespace bgg
