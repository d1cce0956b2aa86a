#include "bgg/value_space.hpp"

#include <map>
#include <stdexcept>

namespace bgg {

std::string to_string(ValueTag t) {
  switch (t) {
    case ValueTag::R: return "R";
    case ValueTag::V: return "V";
    case ValueTag::M: return "M";
    case ValueTag::S: return "S";
    case ValueTag::K: return "K";
    case ValueTag::T: return "T";
    case ValueTag::ST: return "ST";
  }
  throw std::logic_error("bad ValueTag");
}

ValueTag value_tag_from_string(std::string_view s) {
  if (s == "R") return ValueTag::R;
  if (s == "V") return ValueTag::V;
  if (s == "M") return ValueTag::M;
  if (s == "S") return ValueTag::S;
  if (s == "K") return ValueTag::K;
  if (s == "T") return ValueTag::T;
  if (s == "ST") return ValueTag::ST;
  throw std::invalid_argument("unknown value space '" + std::string(s) + "'");
}

int ValueSpace::ambient_dim() const {
  switch (ambient) {
    case AmbientKind::Scalar: return 1;
    case AmbientKind::Vector: return n;
    case AmbientKind::Matrix: return n * n;
  }
  throw std::logic_error("bad AmbientKind");
}

namespace {

std::vector<Rational> unit_matrix_entry(int n, int p, int q, const Rational& c) {
  std::vector<Rational> v(static_cast<std::size_t>(n * n), Rational(0));
  v[static_cast<std::size_t>(p * n + q)] = c;
  return v;
}

std::vector<Rational> add(std::vector<Rational> a, const std::vector<Rational>& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

ValueSpace build_space(ValueTag tag, int n) {
  ValueSpace W;
  W.tag = tag;
  W.n = n;
  switch (tag) {
    case ValueTag::R:
      W.ambient = AmbientKind::Scalar;
      W.basis = {{Rational(1)}};
      break;
    case ValueTag::V:
      W.ambient = AmbientKind::Vector;
      for (int i = 0; i < n; ++i) {
        std::vector<Rational> v(static_cast<std::size_t>(n), Rational(0));
        v[static_cast<std::size_t>(i)] = 1;
        W.basis.push_back(std::move(v));
      }
      break;
    case ValueTag::M:
      W.ambient = AmbientKind::Matrix;
      for (int p = 0; p < n; ++p)
        for (int q = 0; q < n; ++q)
          W.basis.push_back(unit_matrix_entry(n, p, q, Rational(1)));
      break;
    case ValueTag::S:
      W.ambient = AmbientKind::Matrix;
      for (int p = 0; p < n; ++p)
        W.basis.push_back(unit_matrix_entry(n, p, p, Rational(1)));
      for (int p = 0; p < n; ++p)
        for (int q = p + 1; q < n; ++q)
          W.basis.push_back(add(unit_matrix_entry(n, p, q, Rational(1)),
                                unit_matrix_entry(n, q, p, Rational(1))));
      break;
    case ValueTag::K:
      W.ambient = AmbientKind::Matrix;
      for (int p = 0; p < n; ++p)
        for (int q = p + 1; q < n; ++q)
          W.basis.push_back(add(unit_matrix_entry(n, p, q, Rational(1)),
                                unit_matrix_entry(n, q, p, Rational(-1))));
      break;
    case ValueTag::T:
      W.ambient = AmbientKind::Matrix;
      for (int p = 0; p < n; ++p)
        for (int q = 0; q < n; ++q)
          if (p != q) W.basis.push_back(unit_matrix_entry(n, p, q, Rational(1)));
      for (int p = 0; p + 1 < n; ++p)
        W.basis.push_back(add(unit_matrix_entry(n, p, p, Rational(1)),
                              unit_matrix_entry(n, n - 1, n - 1, Rational(-1))));
      break;
    case ValueTag::ST: {
      if (n != 3) throw std::invalid_argument("ST value space needs n = 3");
      W.ambient = AmbientKind::Matrix;
      const int pairs[3][2] = {{0, 1}, {0, 2}, {1, 2}};
      for (const auto& pq : pairs)
        W.basis.push_back(add(unit_matrix_entry(n, pq[0], pq[1], Rational(1)),
                              unit_matrix_entry(n, pq[1], pq[0], Rational(1))));
      W.basis.push_back(add(unit_matrix_entry(n, 0, 0, Rational(1)),
                            unit_matrix_entry(n, 2, 2, Rational(-1))));
      W.basis.push_back(add(unit_matrix_entry(n, 1, 1, Rational(1)),
                            unit_matrix_entry(n, 2, 2, Rational(-1))));
      break;
    }
  }
  if (W.ambient != AmbientKind::Scalar && n < 2 && tag != ValueTag::V)
    throw std::invalid_argument("matrix value space needs n >= 2");

  W.B = LinearOp::from_columns(static_cast<std::size_t>(W.ambient_dim()), W.basis);
  const LinearOp Bt = W.B.transpose();
  W.E = exact_inverse(Bt * W.B) * Bt;
  return W;
}

}  // namespace

const ValueSpace& value_space(ValueTag tag, int n) {
  static std::map<std::pair<ValueTag, int>, ValueSpace> cache;
  auto key = std::make_pair(tag, n);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, build_space(tag, n)).first;
  return it->second;
}

std::optional<std::vector<Rational>> value_coords(const ValueSpace& W,
                                                  const std::vector<Rational>& ambient) {
  auto coords = W.E.apply(ambient);
  if (W.B.apply(coords) != ambient) return std::nullopt;
  return coords;
}

std::optional<std::vector<Poly>> value_coords(const ValueSpace& W,
                                              const std::vector<Poly>& ambient, int nvars) {
  auto coords = W.E.apply(ambient, nvars);
  if (W.B.apply(coords, nvars) != ambient) return std::nullopt;
  return coords;
}

std::vector<Rational> value_embed(const ValueSpace& W, const std::vector<Rational>& coords) {
  return W.B.apply(coords);
}

std::vector<Poly> value_embed(const ValueSpace& W, const std::vector<Poly>& coords, int nvars) {
  return W.B.apply(coords, nvars);
}

std::vector<Rational> value_project(const ValueSpace& W, const std::vector<Rational>& ambient) {
  return W.B.apply(W.E.apply(ambient));
}

std::vector<Poly> value_project(const ValueSpace& W, const std::vector<Poly>& ambient, int nvars) {
  return W.B.apply(W.E.apply(ambient, nvars), nvars);
}

// ---------------------------------------------------------------------------

int levi_civita(int i, int j, int k) {
  if (i == j || j == k || i == k) return 0;
  // Parity of the permutation (i j k) of (0 1 2).
  return ((j - i) * (k - j) * (k - i) > 0) ? 1 : -1;
}

namespace {

ValueMap make_map(ValueTag src, ValueTag tgt, int n, LinearOp m) {
  return ValueMap{src, tgt, n, std::move(m)};
}

}  // namespace

ValueMap proxy_map(std::string_view name, int n) {
  const auto mi = [n](int p, int q) { return static_cast<std::size_t>(p * n + q); };
  if (name == "mskw") {
    if (n != 3) throw std::invalid_argument("mskw needs n = 3");
    LinearOp m(9, 3);
    for (int c = 0; c < 3; ++c)
      for (int i = 0; i < 3; ++i)
        for (int k = 0; k < 3; ++k) {
          const int e = levi_civita(i, c, k);
          if (e != 0) m.set(mi(i, k), static_cast<std::size_t>(c), Rational(e));
        }
    return make_map(ValueTag::V, ValueTag::M, n, std::move(m));
  }
  if (name == "vskw") {
    if (n != 3) throw std::invalid_argument("vskw needs n = 3");
    LinearOp m(3, 9);
    for (int p = 0; p < 3; ++p)
      for (int q = 0; q < 3; ++q)
        for (int j = 0; j < 3; ++j) {
          const int e = levi_civita(p, j, q);
          if (e != 0) m.set(static_cast<std::size_t>(j), mi(p, q), Rational(e, 2));
        }
    return make_map(ValueTag::M, ValueTag::V, n, std::move(m));
  }
  if (name == "iota") {
    LinearOp m(static_cast<std::size_t>(n * n), 1);
    for (int i = 0; i < n; ++i) m.set(mi(i, i), 0, Rational(1));
    return make_map(ValueTag::R, ValueTag::M, n, std::move(m));
  }
  if (name == "tr") {
    LinearOp m(1, static_cast<std::size_t>(n * n));
    for (int i = 0; i < n; ++i) m.set(0, mi(i, i), Rational(1));
    return make_map(ValueTag::M, ValueTag::R, n, std::move(m));
  }
  if (name == "sym" || name == "skw") {
    const Rational s = (name == "sym") ? Rational(1, 2) : Rational(-1, 2);
    LinearOp m(static_cast<std::size_t>(n * n), static_cast<std::size_t>(n * n));
    for (int p = 0; p < n; ++p)
      for (int q = 0; q < n; ++q) {
        m.add_to(mi(p, q), mi(p, q), Rational(1, 2));
        m.add_to(mi(q, p), mi(p, q), s);
      }
    return make_map(ValueTag::M, ValueTag::M, n, std::move(m));
  }
  if (name == "dev") {
    LinearOp m = LinearOp::identity(static_cast<std::size_t>(n * n));
    for (int p = 0; p < n; ++p)
      for (int i = 0; i < n; ++i) m.add_to(mi(i, i), mi(p, p), Rational(-1, n));
    return make_map(ValueTag::M, ValueTag::M, n, std::move(m));
  }
  if (name == "scal_S") {
    LinearOp m(static_cast<std::size_t>(n * n), static_cast<std::size_t>(n * n));
    for (int p = 0; p < n; ++p)
      for (int q = 0; q < n; ++q) m.set(mi(q, p), mi(p, q), Rational(1));
    for (int p = 0; p < n; ++p)
      for (int i = 0; i < n; ++i) m.add_to(mi(i, i), mi(p, p), Rational(-1));
    return make_map(ValueTag::M, ValueTag::M, n, std::move(m));
  }
  throw std::invalid_argument("unknown proxy map '" + std::string(name) + "'");
}

}  // namespace bgg
