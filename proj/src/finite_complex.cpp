#include "bgg/finite_complex.hpp"

#include <random>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace bgg {

namespace {

std::size_t su(int v) { return static_cast<std::size_t>(v); }

LinearOp zero_op(int rows, int cols) { return LinearOp(su(rows), su(cols)); }

}  // namespace

void validate_complex(const FiniteComplex& c) {
  if (c.d.size() + 1 != c.dims.size())
    throw std::invalid_argument("complex: need one differential per adjacent pair");
  for (int k = 0; k + 1 < c.spaces(); ++k) {
    const LinearOp& dk = c.d[su(k)];
    if (dk.rows() != su(c.dims[su(k + 1)]) || dk.cols() != su(c.dims[su(k)]))
      throw std::invalid_argument("complex: differential shape mismatch");
  }
  for (int k = 0; k + 2 < c.spaces(); ++k)
    if (!(c.d[su(k + 1)] * c.d[su(k)]).is_zero())
      throw std::invalid_argument("complex: d o d != 0");
}

std::vector<int> cohomology_dims(const FiniteComplex& c) {
  std::vector<int> h(c.dims.size(), 0);
  std::vector<int> rank(c.d.size(), 0);
  for (std::size_t k = 0; k < c.d.size(); ++k)
    rank[k] = static_cast<int>(rank_of(c.d[k]));
  for (int k = 0; k < c.spaces(); ++k) {
    int rin = k > 0 ? rank[su(k - 1)] : 0;
    int rout = k + 1 < c.spaces() ? rank[su(k)] : 0;
    h[su(k)] = c.dims[su(k)] - rin - rout;
  }
  return h;
}

int euler_characteristic(const std::vector<int>& dims) {
  int chi = 0, sign = 1;
  for (int d : dims) {
    chi += sign * d;
    sign = -sign;
  }
  return chi;
}

namespace {

void check_homotopy_shapes(const FiniteComplex& c, const HomotopySet& h) {
  if (h.P.size() != c.d.size() || h.L.size() != c.dims.size())
    throw std::invalid_argument("homotopy set: wrong number of operators");
  for (std::size_t k = 0; k < h.P.size(); ++k)
    if (h.P[k].rows() != su(c.dims[k]) || h.P[k].cols() != su(c.dims[k + 1]))
      throw std::invalid_argument("homotopy set: P shape mismatch");
  for (std::size_t k = 0; k < h.L.size(); ++k)
    if (h.L[k].rows() != su(c.dims[k]) || h.L[k].cols() != su(c.dims[k]))
      throw std::invalid_argument("homotopy set: L shape mismatch");
}

/// d P + P d at degree k (terms present where defined).
LinearOp dp_pd(const FiniteComplex& c, const HomotopySet& h, int k) {
  LinearOp acc = zero_op(c.dims[su(k)], c.dims[su(k)]);
  if (k > 0) acc = acc + c.d[su(k - 1)] * h.P[su(k - 1)];
  if (k + 1 < c.spaces()) acc = acc + h.P[su(k)] * c.d[su(k)];
  return acc;
}

}  // namespace

HomotopyReport check_homotopy(const FiniteComplex& c, const HomotopySet& h) {
  check_homotopy_shapes(c, h);
  HomotopyReport rep;
  rep.homotopy_ok = true;
  rep.dl_commutes = true;
  for (int k = 0; k < c.spaces(); ++k) {
    LinearOp lhs = dp_pd(c, h, k);
    LinearOp rhs = LinearOp::identity(su(c.dims[su(k)])) - h.L[su(k)];
    if (lhs != rhs) {
      rep.homotopy_ok = false;
      std::ostringstream os;
      os << "dP + Pd != I - L at degree " << k;
      rep.detail = os.str();
      break;
    }
  }
  for (int k = 0; k + 1 < c.spaces(); ++k) {
    if (c.d[su(k)] * h.L[su(k)] != h.L[su(k + 1)] * c.d[su(k)]) {
      rep.dl_commutes = false;
      std::ostringstream os;
      os << "dL != Ld at degree " << k;
      if (!rep.detail.empty()) rep.detail += "; ";
      rep.detail += os.str();
      break;
    }
  }
  // d L = L d is forced by the homotopy identity: both sides equal d - dPd.
  if (rep.homotopy_ok && !rep.dl_commutes)
    throw std::logic_error("check_homotopy: dL = Ld must follow from dP + Pd = I - L");
  return rep;
}

HomotopySet hodge_homotopy(const FiniteComplex& c) {
  validate_complex(c);
  HomotopySet h;
  h.P.reserve(c.d.size());
  for (const LinearOp& dk : c.d) h.P.push_back(pseudo_inverse(dk));
  h.L.reserve(c.dims.size());
  for (int k = 0; k < c.spaces(); ++k)
    h.L.push_back(LinearOp::identity(su(c.dims[su(k)])) - dp_pd(c, h, k));
  return h;
}

SubcomplexResult subcomplex_from_L(const FiniteComplex& c, const HomotopySet& h) {
  HomotopyReport rep = check_homotopy(c, h);
  if (!rep.homotopy_ok)
    throw std::invalid_argument("subcomplex_from_L: homotopy identity fails: " + rep.detail);
  SubcomplexResult res;
  res.inclusion.reserve(c.dims.size());
  for (int k = 0; k < c.spaces(); ++k) {
    auto rki = rank_kernel_image(h.L[su(k)]);
    res.inclusion.push_back(
        LinearOp::from_columns(su(c.dims[su(k)]), rki.image));
    res.sub.dims.push_back(static_cast<int>(rki.rank));
  }
  for (int k = 0; k + 1 < c.spaces(); ++k) {
    // d maps ran(L^k) into ran(L^{k+1}) because dL = Ld; solve for the
    // induced matrix in the chosen bases.
    auto coords = solve_exact(res.inclusion[su(k + 1)], c.d[su(k)] * res.inclusion[su(k)]);
    if (!coords)
      throw std::logic_error("subcomplex_from_L: d does not preserve ran(L)");
    res.sub.d.push_back(*coords);
  }
  validate_complex(res.sub);
  res.cohomology_sub = cohomology_dims(res.sub);
  res.cohomology_full = cohomology_dims(c);
  res.equal = res.cohomology_sub == res.cohomology_full;
  return res;
}

RandomComplex random_complex(std::uint64_t seed, const std::vector<int>& dims) {
  for (int d : dims)
    if (d < 0) throw std::invalid_argument("random_complex: negative dimension");
  if (dims.empty()) throw std::invalid_argument("random_complex: empty dimension list");
  std::mt19937_64 rng(seed);
  const int m = static_cast<int>(dims.size());

  // Draw differential ranks r[k] subject to r[k-1] + r[k] <= dims[k] (and
  // r interpreted as 0 off the ends), scanning left to right.
  std::vector<int> r(su(m > 0 ? m - 1 : 0), 0);
  int prev = 0;
  for (int k = 0; k + 1 < m; ++k) {
    int cap = std::min(dims[su(k)] - prev, dims[su(k + 1)]);
    if (cap < 0) cap = 0;
    // rng() % k draws keep the stream portable across standard libraries
    // (std::uniform_int_distribution is implementation-defined).
    r[su(k)] = static_cast<int>(rng() % su(cap + 1));
    prev = r[su(k)];
  }

  // Block-canonical complex: d^k sends the trailing r[k] coordinates of V^k
  // to the leading r[k] coordinates of V^{k+1}.
  FiniteComplex c;
  c.dims = dims;
  for (int k = 0; k + 1 < m; ++k) {
    LinearOp dk = zero_op(dims[su(k + 1)], dims[su(k)]);
    for (int a = 0; a < r[su(k)]; ++a)
      dk.set(su(a), su(dims[su(k)] - r[su(k)] + a), Rational(1));
    c.d.push_back(dk);
  }

  // Conjugate by unimodular integer matrices: M^{k+1} d^k (M^k)^{-1}.
  std::vector<LinearOp> M, Minv;
  M.reserve(su(m));
  Minv.reserve(su(m));
  for (int k = 0; k < m; ++k) {
    const int nk = dims[su(k)];
    LinearOp mk = LinearOp::identity(su(nk));
    if (nk > 1) {
      for (int step = 0; step < 2 * nk; ++step) {
        int a = static_cast<int>(rng() % su(nk));
        int b = static_cast<int>(rng() % su(nk));
        int lam = static_cast<int>(rng() % 5) - 2;
        if (a == b || lam == 0) continue;
        // row_a += lam * row_b (elementary, determinant 1)
        LinearOp e = LinearOp::identity(su(nk));
        e.set(su(a), su(b), Rational(lam));
        mk = e * mk;
      }
    }
    M.push_back(mk);
    Minv.push_back(exact_inverse(mk));
  }
  for (int k = 0; k + 1 < m; ++k)
    c.d[su(k)] = M[su(k + 1)] * c.d[su(k)] * Minv[su(k)];

  RandomComplex out{std::move(c), {}};
  out.cohomology.resize(su(m));
  for (int k = 0; k < m; ++k) {
    int rin = k > 0 ? r[su(k - 1)] : 0;
    int rout = k + 1 < m ? r[su(k)] : 0;
    out.cohomology[su(k)] = dims[su(k)] - rin - rout;
  }
  validate_complex(out.c);
  return out;
}

HomotopySet modify_hat_tilde(const FiniteComplex& c, const HomotopySet& h) {
  HomotopyReport rep = check_homotopy(c, h);
  if (!rep.homotopy_ok)
    throw std::invalid_argument("modify_hat_tilde: dP + Pd = I - L fails: " + rep.detail);
  for (int k = 0; k < c.spaces(); ++k) {
    const LinearOp& Lk = h.L[su(k)];
    if (Lk * Lk != Lk)
      throw std::invalid_argument("modify_hat_tilde: L is not idempotent");
    if (k + 1 < c.spaces()) {
      if (!(c.d[su(k)] * Lk).is_zero() || !(h.L[su(k + 1)] * c.d[su(k)]).is_zero())
        throw std::invalid_argument("modify_hat_tilde: dL = Ld = 0 fails");
    }
  }

  // Step 1: P-hat = P - P L - L P + L P L, killing L on both sides.
  HomotopySet hat;
  hat.L = h.L;
  hat.P.reserve(h.P.size());
  for (std::size_t k = 0; k < h.P.size(); ++k) {
    const LinearOp& P = h.P[k];
    const LinearOp& Lsrc = h.L[k + 1];
    const LinearOp& Ltgt = h.L[k];
    hat.P.push_back(P - P * Lsrc - Ltgt * P + Ltgt * P * Lsrc);
  }

  // Step 2: P~ = P-hat - d P-hat P-hat, granting the complex property.
  HomotopySet tld;
  tld.L = h.L;
  tld.P.reserve(hat.P.size());
  for (std::size_t k = 0; k < hat.P.size(); ++k) {
    LinearOp Pt = hat.P[k];
    if (k >= 1) Pt = Pt - c.d[k - 1] * hat.P[k - 1] * hat.P[k];
    tld.P.push_back(Pt);
  }

  // Postconditions, exact: same homotopy identity, L annihilation, and the
  // complex property. All are theorems; violations indicate a bug.
  HomotopyReport post = check_homotopy(c, tld);
  if (!post.homotopy_ok)
    throw std::logic_error("modify_hat_tilde: homotopy identity lost");
  for (std::size_t k = 0; k < tld.P.size(); ++k) {
    if (!(tld.P[k] * tld.L[k + 1]).is_zero() || !(tld.L[k] * tld.P[k]).is_zero())
      throw std::logic_error("modify_hat_tilde: L P~ = P~ L = 0 fails");
    if (k >= 1 && !(tld.P[k - 1] * tld.P[k]).is_zero())
      throw std::logic_error("modify_hat_tilde: P~ o P~ = 0 fails");
    if (k >= 1) {
      if (c.d[k - 1] * tld.P[k - 1] != c.d[k - 1] * hat.P[k - 1] ||
          tld.P[k] * c.d[k] != hat.P[k] * c.d[k])
        throw std::logic_error("modify_hat_tilde: d P~ = d P-hat transport fails");
    }
  }
  return tld;
}

nlohmann::json complex_to_json(const FiniteComplex& c) {
  nlohmann::json j;
  j["dims"] = c.dims;
  nlohmann::json ds = nlohmann::json::array();
  for (const LinearOp& dk : c.d) {
    nlohmann::json trip = nlohmann::json::array();
    for (const auto& [rc, v] : dk.entries())
      trip.push_back({rc.first, rc.second, rational_to_string(v)});
    ds.push_back(std::move(trip));
  }
  j["d"] = std::move(ds);
  return j;
}

FiniteComplex complex_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("dims") || !j.contains("d"))
    throw std::invalid_argument("complex JSON: need dims and d");
  FiniteComplex c;
  c.dims = j.at("dims").get<std::vector<int>>();
  const auto& ds = j.at("d");
  if (!ds.is_array() || ds.size() + 1 != c.dims.size())
    throw std::invalid_argument("complex JSON: need one differential per adjacent pair");
  for (std::size_t k = 0; k < ds.size(); ++k) {
    LinearOp dk(su(c.dims[k + 1]), su(c.dims[k]));
    for (const auto& t : ds[k]) {
      if (!t.is_array() || t.size() != 3)
        throw std::invalid_argument("complex JSON: triplets are [row, col, value]");
      std::size_t r = t[0].get<std::size_t>(), col = t[1].get<std::size_t>();
      if (r >= dk.rows() || col >= dk.cols())
        throw std::invalid_argument("complex JSON: triplet index out of range");
      dk.set(r, col, rational_from_string(t[2].get<std::string>()));
    }
    c.d.push_back(std::move(dk));
  }
  validate_complex(c);
  return c;
}

}  // namespace bgg
