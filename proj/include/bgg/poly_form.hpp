// Polynomial differential forms with values in a canonical value space.
//
// A PolyForm of degree k stores, for each increasing index set I (|I| = k)
// and each value-space basis index a, a polynomial coefficient. Index sets
// are represented as bitmasks (bit i = variable x_{i+1}) and enumerated in
// lexicographic order of the increasing tuples.

#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "bgg/poly.hpp"
#include "bgg/value_space.hpp"

#include <nlohmann/json_fwd.hpp>

namespace bgg {

using IndexMask = std::uint32_t;

/// All k-subsets of {0..n-1} as bitmasks, in lexicographic order of the
/// increasing tuples. Empty for k < 0 or k > n.
const std::vector<IndexMask>& index_sets(int n, int k);

/// 1-based sorted tuple of a mask, e.g. {1,3} for bits 0 and 2.
std::vector<int> mask_to_tuple(IndexMask m);
IndexMask tuple_to_mask(const std::vector<int>& onebased, int n);

/// Sign of wedging dx_{i+1} (0-based i) onto dx_I from the left; nullopt-like
/// zero is signalled by returning 0. On success *out gets I u {i}.
int wedge_sign(IndexMask mask, int i, IndexMask* out);

class PolyForm {
 public:
  PolyForm() = default;
  PolyForm(int n, int k, ValueTag value) : n_(n), k_(k), value_(value) {}

  int n() const { return n_; }
  int k() const { return k_; }
  ValueTag value() const { return value_; }
  const ValueSpace& value_space() const;
  int value_dim() const;

  bool is_zero() const { return coeff_.empty(); }
  /// Max total degree of any coefficient; -1 when zero.
  int degree() const;

  Poly coeff(IndexMask mask, int a) const;
  void set_coeff(IndexMask mask, int a, const Poly& p);
  void add_coeff(IndexMask mask, int a, const Poly& p);
  const std::map<std::pair<IndexMask, int>, Poly>& terms() const { return coeff_; }

  PolyForm operator+(const PolyForm& o) const;
  PolyForm operator-(const PolyForm& o) const;
  PolyForm operator-() const;
  PolyForm operator*(const Rational& c) const;
  PolyForm& operator+=(const PolyForm& o);
  bool operator==(const PolyForm& o) const;
  bool operator!=(const PolyForm& o) const { return !(*this == o); }

  /// Coefficients as a flat coordinate vector over the form-level basis
  /// (index sets in canonical order, value index fastest).
  std::vector<Poly> coordinates() const;
  static PolyForm from_coordinates(int n, int k, ValueTag value,
                                   const std::vector<Poly>& coords);

  std::string to_string() const;

 private:
  int n_ = 0, k_ = 0;
  ValueTag value_ = ValueTag::R;
  std::map<std::pair<IndexMask, int>, Poly> coeff_;  // nonzero only
};

nlohmann::json polyform_to_json(const PolyForm& f);
PolyForm polyform_from_json(const nlohmann::json& j);

}  // namespace bgg
