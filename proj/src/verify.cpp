#include "bgg/verify.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "bgg/finite_complex.hpp"

namespace bgg {

namespace {

std::size_t su(int v) { return static_cast<std::size_t>(v); }

int op_order(const std::string& op) {
  static const std::map<std::string, int> orders = {
      {"grad", 1},    {"def", 1},     {"div", 1},    {"curl", 1},
      {"hess", 2},    {"inc", 2},     {"divdiv", 2}, {"symcurl", 1},
      {"devgrad", 1}, {"devhess", 2}, {"devdef", 1},
  };
  auto it = orders.find(op);
  if (it == orders.end()) throw std::invalid_argument("unknown arrow '" + op + "'");
  return it->second;
}

const std::vector<PolySeqSpec>& seq_table() {
  using VT = ValueTag;
  static const std::vector<PolySeqSpec> table = {
      {"poly-elast",
       {VT::V, VT::S, VT::S, VT::V},
       {0, 1, 3, 4},
       {"def", "inc", "div"},
       {1, 2, 1},
       6,
       "elasticity"},
      {"poly-hess",
       {VT::R, VT::S, VT::T, VT::V},
       {0, 2, 3, 4},
       {"hess", "curl", "div"},
       {2, 1, 1},
       4,
       "hessian"},
      {"poly-divdiv",
       {VT::V, VT::T, VT::S, VT::R},
       {0, 1, 2, 4},
       {"devgrad", "symcurl", "divdiv"},
       {1, 1, 2},
       4,
       "divdiv"},
      {"poly-conf-hess",
       {VT::R, VT::ST, VT::ST, VT::R},
       {0, 2, 3, 5},
       {"devhess", "symcurl", "divdiv"},
       {2, 1, 2},
       5,
       ""},
      {"poly-conf-def",
       {VT::V, VT::ST, VT::ST, VT::V},
       {0, 1, 4, 5},
       {"devdef", "", "div"},
       {1, 3, 1},
       10,
       ""},
  };
  return table;
}

/// The field mu * (b-th canonical basis vector of W), in ambient components.
ProxyField make_basis_field(const ValueSpace& W, const Poly& mu, int b) {
  std::vector<Rational> unit(su(W.dim()), Rational(0));
  unit[su(b)] = Rational(1);
  std::vector<Rational> amb = value_embed(W, unit);
  std::vector<Poly> comps;
  comps.reserve(amb.size());
  for (const Rational& c : amb) comps.push_back(mu * c);
  switch (W.ambient) {
    case AmbientKind::Scalar:
      return ProxyField::scalar(comps[0]);
    case AmbientKind::Vector:
      return ProxyField::vector(W.n, std::move(comps));
    case AmbientKind::Matrix:
      return ProxyField::matrix(W.n, std::move(comps));
  }
  throw std::logic_error("make_basis_field: bad ambient kind");
}

/// Rebuild a field from coefficients over (monomial x value-basis) columns.
ProxyField field_from_column(const ValueSpace& W, const std::vector<Monomial>& mons,
                             const std::vector<Rational>& v) {
  std::vector<Poly> coords(su(W.dim()), Poly(W.n));
  for (std::size_t mi = 0; mi < mons.size(); ++mi)
    for (int b = 0; b < W.dim(); ++b) {
      const Rational& c = v[mi * su(W.dim()) + su(b)];
      if (c != 0) coords[su(b)] += Poly::monomial(mons[mi], c);
    }
  std::vector<Poly> amb = value_embed(W, coords, W.n);
  switch (W.ambient) {
    case AmbientKind::Scalar:
      return ProxyField::scalar(amb[0]);
    case AmbientKind::Vector:
      return ProxyField::vector(W.n, std::move(amb));
    case AmbientKind::Matrix:
      return ProxyField::matrix(W.n, std::move(amb));
  }
  throw std::logic_error("field_from_column: bad ambient kind");
}

/// Matrix of `op` from H_s (x) Win to H_{s-q} (x) Wout over monomial bases.
LinearOp graded_matrix(const std::string& op, ValueTag win, ValueTag wout, int s,
                       bool reversed) {
  const ValueSpace& W = value_space(win, 3);
  const ValueSpace& Wo = value_space(wout, 3);
  const int q = op_order(op);
  std::vector<Monomial> mons_in = monomial_basis(3, s, BasisMode::Homogeneous);
  std::vector<Monomial> mons_out;
  if (s - q >= 0) mons_out = monomial_basis(3, s - q, BasisMode::Homogeneous);
  if (reversed) {
    std::reverse(mons_in.begin(), mons_in.end());
    std::reverse(mons_out.begin(), mons_out.end());
  }
  std::map<Monomial, std::size_t, GrlexLess> out_idx;
  for (std::size_t i = 0; i < mons_out.size(); ++i) out_idx.emplace(mons_out[i], i);

  LinearOp M(mons_out.size() * su(Wo.dim()), mons_in.size() * su(W.dim()));
  for (std::size_t mi = 0; mi < mons_in.size(); ++mi) {
    Poly mu = Poly::monomial(mons_in[mi], Rational(1));
    for (int b = 0; b < W.dim(); ++b) {
      ProxyField out = apply_proxy_operator(op, make_basis_field(W, mu, b));
      auto coords = value_coords(Wo, out.comp, 3);
      if (!coords)
        throw std::logic_error("arrow '" + op + "' leaves the target value space");
      const std::size_t col = mi * su(W.dim()) + su(b);
      for (int w = 0; w < Wo.dim(); ++w)
        for (const auto& [mon, c] : (*coords)[su(w)].terms()) {
          auto it = out_idx.find(mon);
          if (it == out_idx.end())
            throw std::logic_error("arrow '" + op + "' breaks the homogeneous grading");
          M.set(it->second * su(Wo.dim()) + su(w), col, c);
        }
    }
  }
  return M;
}

std::mutex g_memo_mu;

int graded_rank(const std::string& op, ValueTag win, ValueTag wout, int s,
                bool reversed) {
  static std::map<std::string, int> memo;
  std::ostringstream key;
  key << op << '/' << to_string(win) << '/' << s << (reversed ? "/r" : "");
  {
    std::lock_guard<std::mutex> lock(g_memo_mu);
    auto it = memo.find(key.str());
    if (it != memo.end()) return it->second;
  }
  int rank = static_cast<int>(rank_of(graded_matrix(op, win, wout, s, reversed)));
  std::lock_guard<std::mutex> lock(g_memo_mu);
  memo.emplace(key.str(), rank);
  return rank;
}

bool graded_composes_to_zero(const std::string& op1, const std::string& op2,
                             ValueTag win, int s) {
  static std::map<std::string, bool> memo;
  std::ostringstream key;
  key << op1 << '/' << op2 << '/' << to_string(win) << '/' << s;
  {
    std::lock_guard<std::mutex> lock(g_memo_mu);
    auto it = memo.find(key.str());
    if (it != memo.end()) return it->second;
  }
  const ValueSpace& W = value_space(win, 3);
  bool ok = true;
  for (const Monomial& mon : monomial_basis(3, s, BasisMode::Homogeneous)) {
    Poly mu = Poly::monomial(mon, Rational(1));
    for (int b = 0; b < W.dim() && ok; ++b) {
      ProxyField mid = apply_proxy_operator(op1, make_basis_field(W, mu, b));
      if (!apply_proxy_operator(op2, mid).is_zero()) ok = false;
    }
    if (!ok) break;
  }
  std::lock_guard<std::mutex> lock(g_memo_mu);
  memo.emplace(key.str(), ok);
  return ok;
}

/// Kernel fields of `op` on the degree-<= t slot, graded piece by piece.
std::vector<ProxyField> graded_kernel_fields(const std::string& op, ValueTag win,
                                             ValueTag wout, int t) {
  std::vector<ProxyField> fields;
  for (int s = 0; s <= t; ++s) {
    auto mons = monomial_basis(3, s, BasisMode::Homogeneous);
    auto rki = rank_kernel_image(graded_matrix(op, win, wout, s, false));
    const ValueSpace& W = value_space(win, 3);
    for (const auto& v : rki.kernel) fields.push_back(field_from_column(W, mons, v));
  }
  return fields;
}

int slot_dim(const PolySeqSpec& sp, int i, int r) {
  int t = r - sp.offsets[su(i)];
  if (t < 0) return 0;
  return static_cast<int>(dim_up_to(3, t)) * value_space(sp.slots[su(i)], 3).dim();
}

void fail(SequenceReport& rep, const std::string& what) {
  rep.pass = false;
  if (rep.counterexample.empty()) rep.counterexample = what;
}

/// Degree of the highest nonzero coefficient of a proxy field.
int field_degree(const ProxyField& f) {
  int d = -1;
  for (const Poly& p : f.comp) d = std::max(d, p.degree());
  return d;
}

}  // namespace

ProxyField basis_field(ValueTag tag, int n, const Poly& coeff, int b) {
  return make_basis_field(value_space(tag, n), coeff, b);
}

const PolySeqSpec& polyseq_spec(const std::string& name) {
  for (const PolySeqSpec& sp : seq_table())
    if (sp.name == name) return sp;
  throw std::invalid_argument("unknown sequence '" + name + "'");
}

std::vector<std::string> polyseq_names() {
  std::vector<std::string> names;
  for (const PolySeqSpec& sp : seq_table()) names.push_back(sp.name);
  return names;
}

std::vector<ProxyField> degree0_kernel_basis(const std::string& name, int r) {
  const PolySeqSpec& sp = polyseq_spec(name);
  if (r < 0) return {};
  return graded_kernel_fields(sp.ops[0], sp.slots[0], sp.slots[1], r - sp.offsets[0]);
}

namespace {

/// Poincare witness for grid-backed sequences: P applied to (capped) kernel
/// bases must be recovered by the differential and stay in the previous slot.
void poincare_witness(const PolySeqSpec& sp, int r, SequenceReport& rep) {
  DiagramSpec D = builtin_diagram(sp.diagram);
  BGGComplexDesc desc = bgg_complex_desc(sp.diagram);
  constexpr std::size_t kCap = 12;
  for (int i = 1; i <= 3; ++i) {
    int t = r - sp.offsets[su(i)];
    if (t < 0) continue;
    std::vector<ProxyField> fields;
    if (i < 3) {
      fields = graded_kernel_fields(sp.ops[su(i)], sp.slots[su(i)], sp.slots[su(i + 1)], t);
    } else {
      const ValueSpace& W = value_space(sp.slots[3], 3);
      for (const Monomial& mon : monomial_basis(3, t, BasisMode::UpTo)) {
        Poly mu = Poly::monomial(mon, Rational(1));
        for (int b = 0; b < W.dim() && fields.size() < kCap; ++b)
          fields.push_back(make_basis_field(W, mu, b));
        if (fields.size() >= kCap) break;
      }
    }
    if (fields.size() > kCap) fields.resize(kCap);
    for (const ProxyField& u : fields) {
      TwistedElement eu = embed_in_bgg_slot(D, desc, i, u);
      TwistedElement w = bgg_poincare(D, eu);
      ProxyField pw;
      try {
        pw = extract_from_bgg_slot(D, desc, i - 1, w);
      } catch (const std::invalid_argument& e) {
        std::ostringstream os;
        os << "poincare witness: image at slot " << i << " leaves slot " << i - 1 << ": "
           << e.what();
        fail(rep, os.str());
        return;
      }
      if (field_degree(pw) > r - sp.offsets[su(i - 1)]) {
        std::ostringstream os;
        os << "poincare witness: image degree " << field_degree(pw) << " exceeds slot "
           << i - 1 << " bound " << r - sp.offsets[su(i - 1)];
        fail(rep, os.str());
        return;
      }
      if (bgg_d(D, w) != eu) {
        std::ostringstream os;
        os << "poincare witness: D(P(u)) != u for a kernel field at slot " << i;
        fail(rep, os.str());
        return;
      }
    }
  }
}

}  // namespace

SequenceReport verify_polynomial_complex(const std::string& name, int r,
                                         bool reversed_order) {
  const PolySeqSpec& sp = polyseq_spec(name);
  SequenceReport rep;
  rep.name = name;
  rep.r = r;
  rep.expected = {sp.expected_h0, 0, 0, 0};
  rep.pass = true;

  std::vector<int> dims;
  for (int i = 0; i < 4; ++i) {
    SlotReport s;
    s.degree = r - sp.offsets[su(i)];
    s.dim = slot_dim(sp, i, r);
    rep.slots.push_back(s);
    dims.push_back(s.dim);
  }
  rep.chi = euler_characteristic(dims);

  bool external = false;
  for (int i = 0; i < 3; ++i) {
    if (sp.ops[su(i)].empty()) {
      external = true;
      continue;
    }
    int t = rep.slots[su(i)].degree;
    int rk = 0;
    for (int s = 0; s <= t; ++s)
      rk += graded_rank(sp.ops[su(i)], sp.slots[su(i)], sp.slots[su(i + 1)], s,
                        reversed_order);
    rep.slots[su(i)].rank_out = rk;
  }

  for (int i = 0; i < 2; ++i) {
    if (sp.ops[su(i)].empty() || sp.ops[su(i + 1)].empty()) continue;
    int t = rep.slots[su(i)].degree;
    for (int s = 0; s <= t; ++s)
      if (!graded_composes_to_zero(sp.ops[su(i)], sp.ops[su(i + 1)], sp.slots[su(i)], s)) {
        std::ostringstream os;
        os << "composition " << sp.ops[su(i + 1)] << " o " << sp.ops[su(i)]
           << " != 0 on homogeneous degree " << s;
        fail(rep, os.str());
      }
  }

  for (int i = 0; i < 4; ++i) {
    int rin = 0, rout = 0;
    if (i > 0) rin = rep.slots[su(i - 1)].rank_out;
    if (i < 3) rout = rep.slots[su(i)].rank_out;
    if (rin >= 0 && rout >= 0)
      rep.slots[su(i)].cohomology = rep.slots[su(i)].dim - rin - rout;
  }

  if (!external) {
    int chi_h = 0, sign = 1;
    for (int i = 0; i < 4; ++i) {
      chi_h += sign * rep.slots[su(i)].cohomology;
      sign = -sign;
    }
    rep.chi_consistent = (rep.chi == chi_h);
    for (int i = 0; i < 4; ++i)
      if (rep.slots[su(i)].cohomology != rep.expected[su(i)]) {
        std::ostringstream os;
        os << "cohomology at slot " << i << " is " << rep.slots[su(i)].cohomology
           << ", expected " << rep.expected[su(i)];
        fail(rep, os.str());
      }
    if (!rep.chi_consistent) fail(rep, "Euler characteristic mismatch");
  } else {
    // Middle arrow externally suppliable: verify the end arrows, the
    // degree-0 cohomology, vanishing at the top slot, and the Euler
    // characteristic, which equals h0 exactly when the sequence is exact
    // in positive degrees.
    rep.note = "middle arrow externally suppliable; verified end arrows, "
               "degree-0 kernel, top slot, and Euler characteristic";
    int h0 = rep.slots[0].cohomology;
    int h3 = rep.slots[3].dim - std::max(rep.slots[2].rank_out, 0);
    rep.slots[3].cohomology = h3;
    rep.chi_consistent = (rep.chi == sp.expected_h0);
    if (h0 != sp.expected_h0) {
      std::ostringstream os;
      os << "degree-0 cohomology is " << h0 << ", expected " << sp.expected_h0;
      fail(rep, os.str());
    }
    if (h3 != 0) fail(rep, "top-slot cohomology nonzero");
    if (!rep.chi_consistent) fail(rep, "Euler characteristic mismatch");
  }

  if (rep.pass && !sp.diagram.empty()) poincare_witness(sp, r, rep);
  return rep;
}

namespace {

/// Flattens twisted elements of one degree over a bounded monomial basis.
class TwistedFlattener {
 public:
  TwistedFlattener(const DiagramSpec& D, int degree, int rmax)
      : D_(D), degree_(degree), mons_(monomial_basis(D.n, rmax, BasisMode::UpTo)) {
    for (std::size_t i = 0; i < mons_.size(); ++i) idx_.emplace(mons_[i], i);
    len_ = 0;
    for (int j = 0; j < D.rows(); ++j)
      len_ += su(D.slot_form_dim(degree, j));
    len_ *= mons_.size();
  }

  std::size_t length() const { return len_; }

  std::vector<Rational> flatten(const TwistedElement& u) const {
    if (u.degree != degree_)
      throw std::invalid_argument("flatten: degree mismatch");
    std::vector<Rational> out(len_, Rational(0));
    std::size_t base = 0;
    for (int j = 0; j < D_.rows(); ++j) {
      std::vector<Poly> coords = u.comp[su(j)].coordinates();
      for (std::size_t c = 0; c < coords.size(); ++c)
        for (const auto& [mon, val] : coords[c].terms()) {
          auto it = idx_.find(mon);
          if (it == idx_.end())
            throw std::logic_error("flatten: coefficient degree exceeds the bound");
          out[(base + c) * mons_.size() + it->second] = val;
        }
      base += su(D_.slot_form_dim(degree_, j));
    }
    return out;
  }

 private:
  const DiagramSpec& D_;
  int degree_;
  std::vector<Monomial> mons_;
  std::map<Monomial, std::size_t, GrlexLess> idx_;
  std::size_t len_ = 0;
};

}  // namespace

SequenceReport verify_enriched_complex(const std::string& name, int r) {
  const PolySeqSpec& sp = polyseq_spec(name);
  if (sp.diagram.empty())
    throw std::invalid_argument("verify_enriched_complex: no backing grid for " + name);
  DiagramSpec D = builtin_diagram(sp.diagram);
  BGGComplexDesc desc = bgg_complex_desc(sp.diagram);
  auto Dp = std::make_shared<DiagramSpec>(D);
  OpFamily<TwistedElement> fam;
  fam.d = [Dp](const TwistedElement& u, int) { return bgg_d(*Dp, u); };
  fam.p = [Dp](const TwistedElement& u, int) { return bgg_poincare(*Dp, u); };
  OpFamily<TwistedElement> famc = complexify(fam);

  SequenceReport rep;
  rep.name = name + "+";
  rep.r = r;
  rep.expected = {sp.expected_h0, 0, 0, 0};
  rep.pass = true;

  // Base spans P_r (x) W_i, embedded in the BGG slots.
  std::vector<std::vector<TwistedElement>> base(4);
  for (int i = 0; i < 4; ++i) {
    const ValueSpace& W = value_space(sp.slots[su(i)], 3);
    for (const Monomial& mon : monomial_basis(3, r, BasisMode::UpTo)) {
      Poly mu = Poly::monomial(mon, Rational(1));
      for (int b = 0; b < W.dim(); ++b)
        base[su(i)].push_back(embed_in_bgg_slot(D, desc, i, make_basis_field(W, mu, b)));
    }
  }

  // Enriched spans E^i = base_i + P~[base_{i+1}].
  std::vector<std::vector<TwistedElement>> E = base;
  for (int i = 0; i < 3; ++i)
    for (const TwistedElement& u : base[su(i + 1)])
      E[su(i)].push_back(famc.p(u, i + 1));

  const int rmax = r + 4;
  std::vector<TwistedFlattener> flat;
  flat.reserve(4);
  for (int i = 0; i < 4; ++i) flat.emplace_back(D, i, rmax);

  auto span_matrix = [&](int i, const std::vector<TwistedElement>& vecs) {
    std::vector<std::vector<Rational>> cols;
    cols.reserve(vecs.size());
    for (const TwistedElement& u : vecs) cols.push_back(flat[su(i)].flatten(u));
    return LinearOp::from_columns(flat[su(i)].length(), cols);
  };

  std::vector<LinearOp> spans;
  std::vector<int> dims;
  for (int i = 0; i < 4; ++i) {
    spans.push_back(span_matrix(i, E[su(i)]));
    SlotReport s;
    s.degree = r;
    s.dim = static_cast<int>(rank_of(spans.back()));
    rep.slots.push_back(s);
    dims.push_back(s.dim);
  }
  rep.chi = euler_characteristic(dims);

  // Closure under the differential, and its rank on each enriched slot.
  for (int i = 0; i < 4; ++i) {
    std::vector<TwistedElement> images;
    for (const TwistedElement& u : E[su(i)]) images.push_back(famc.d(u, i));
    if (i == 3) {
      for (const TwistedElement& w : images)
        if (!w.is_zero()) fail(rep, "differential at the top slot is nonzero");
      rep.slots[su(i)].rank_out = 0;
      continue;
    }
    LinearOp img = span_matrix(i + 1, images);
    rep.slots[su(i)].rank_out = static_cast<int>(rank_of(img));
    std::vector<std::vector<Rational>> cols;
    for (const TwistedElement& w : images) cols.push_back(flat[su(i + 1)].flatten(w));
    LinearOp aug = spans[su(i + 1)];
    std::size_t c0 = aug.cols();
    LinearOp wide(aug.rows(), c0 + cols.size());
    wide.insert_block(0, 0, aug);
    for (std::size_t c = 0; c < cols.size(); ++c)
      for (std::size_t rr = 0; rr < cols[c].size(); ++rr)
        if (cols[c][rr] != 0) wide.set(rr, c0 + c, cols[c][rr]);
    if (static_cast<int>(rank_of(wide)) != dims[su(i + 1)]) {
      std::ostringstream os;
      os << "differential image leaves enriched slot " << i + 1;
      fail(rep, os.str());
    }
  }

  // Closure under P~ and the homotopy identities on the enriched spans.
  for (int i = 1; i < 4; ++i) {
    std::vector<std::vector<Rational>> cols;
    for (const TwistedElement& u : E[su(i)])
      cols.push_back(flat[su(i - 1)].flatten(famc.p(u, i)));
    LinearOp wide(spans[su(i - 1)].rows(), spans[su(i - 1)].cols() + cols.size());
    wide.insert_block(0, 0, spans[su(i - 1)]);
    for (std::size_t c = 0; c < cols.size(); ++c)
      for (std::size_t rr = 0; rr < cols[c].size(); ++rr)
        if (cols[c][rr] != 0) wide.set(rr, spans[su(i - 1)].cols() + c, cols[c][rr]);
    if (static_cast<int>(rank_of(wide)) != dims[su(i - 1)]) {
      std::ostringstream os;
      os << "P image leaves enriched slot " << i - 1;
      fail(rep, os.str());
    }
    for (const TwistedElement& u : E[su(i)]) {
      TwistedElement lhs = famc.d(famc.p(u, i), i - 1) + famc.p(famc.d(u, i), i + 1);
      if (!(lhs == u)) {
        std::ostringstream os;
        os << "homotopy identity fails on enriched slot " << i;
        fail(rep, os.str());
        break;
      }
    }
  }
  for (const TwistedElement& u : E[0]) {
    TwistedElement du = famc.d(u, 0);
    if (!(famc.d(famc.p(du, 1), 0) == du)) {
      fail(rep, "degree-0 homotopy identity fails on the enriched slot");
      break;
    }
  }

  for (int i = 0; i < 4; ++i) {
    int rin = i > 0 ? rep.slots[su(i - 1)].rank_out : 0;
    rep.slots[su(i)].cohomology = rep.slots[su(i)].dim - rin - rep.slots[su(i)].rank_out;
    if (rep.slots[su(i)].cohomology != rep.expected[su(i)]) {
      std::ostringstream os;
      os << "enriched cohomology at slot " << i << " is " << rep.slots[su(i)].cohomology
         << ", expected " << rep.expected[su(i)];
      fail(rep, os.str());
    }
  }
  {
    int chi_h = 0, sign = 1;
    for (int i = 0; i < 4; ++i) {
      chi_h += sign * rep.slots[su(i)].cohomology;
      sign = -sign;
    }
    rep.chi_consistent = (rep.chi == chi_h);
    if (!rep.chi_consistent) fail(rep, "Euler characteristic mismatch (enriched)");
  }

  // Witness that the plain equal-degree complex is not P-closed: a slot-1
  // element whose P-image has polynomial degree r + 1.
  {
    const ValueSpace& W1 = value_space(sp.slots[1], 3);
    Poly xr = Poly::constant(3, Rational(1));
    for (int a = 0; a < r; ++a) xr = xr.mul_variable(0);
    ProxyField u = make_basis_field(W1, xr, 0);
    TwistedElement eu = embed_in_bgg_slot(D, desc, 1, u);
    ProxyField pu = extract_from_bgg_slot(D, desc, 0, famc.p(eu, 1));
    if (field_degree(pu) > r) {
      std::ostringstream os;
      os << "plain equal-degree complex is not P-closed: P of (x1^" << r
         << " * first slot-1 basis value) has degree " << field_degree(pu) << " > " << r;
      rep.note = os.str();
    } else {
      fail(rep, "expected P-escape witness for the equal-degree complex not observed");
    }
  }
  return rep;
}

std::vector<int> homog_slot_degrees(int r) { return {r + 4, r + 3, r + 1, r}; }

std::vector<int> homog_slot_dims(int r) {
  const PolySeqSpec& sp = polyseq_spec("poly-elast");
  std::vector<int> degs = homog_slot_degrees(r);
  std::vector<int> dims;
  for (int i = 0; i < 4; ++i)
    dims.push_back(static_cast<int>(dim_homogeneous(3, degs[su(i)])) *
                   value_space(sp.slots[su(i)], 3).dim());
  return dims;
}

HomogReport verify_homogeneous_grading(int r) {
  const PolySeqSpec& sp = polyseq_spec("poly-elast");
  DiagramSpec D = builtin_diagram(sp.diagram);
  BGGComplexDesc desc = bgg_complex_desc(sp.diagram);
  auto Dp = std::make_shared<DiagramSpec>(D);
  OpFamily<TwistedElement> fam;
  fam.d = [Dp](const TwistedElement& u, int) { return bgg_d(*Dp, u); };
  fam.p = [Dp](const TwistedElement& u, int) { return bgg_poincare(*Dp, u); };
  OpFamily<TwistedElement> famc = complexify(fam);

  HomogReport rep;
  rep.r = r;
  rep.degrees = homog_slot_degrees(r);
  rep.dims = homog_slot_dims(r);
  rep.pass = true;
  for (int i = 1; i <= 3; ++i) {
    const ValueSpace& W = value_space(sp.slots[su(i)], 3);
    bool ok = true;
    for (const Monomial& mon : monomial_basis(3, rep.degrees[su(i)], BasisMode::Homogeneous)) {
      Poly mu = Poly::monomial(mon, Rational(1));
      for (int b = 0; b < W.dim() && ok; ++b) {
        TwistedElement eu = embed_in_bgg_slot(D, desc, i, make_basis_field(W, mu, b));
        ProxyField pu;
        try {
          pu = extract_from_bgg_slot(D, desc, i - 1, famc.p(eu, i));
        } catch (const std::invalid_argument&) {
          ok = false;
          break;
        }
        for (const Poly& p : pu.comp) {
          if (p.is_zero()) continue;
          auto parts = p.homogeneous_components();
          if (parts.size() != 1 || parts[0].first != rep.degrees[su(i - 1)]) ok = false;
        }
      }
      if (!ok) break;
    }
    rep.poincare_in_slot.push_back(ok);
    if (!ok) rep.pass = false;
  }
  return rep;
}

nlohmann::json report_to_json(const SequenceReport& rep) {
  nlohmann::json j;
  j["name"] = rep.name;
  j["r"] = rep.r;
  nlohmann::json slots = nlohmann::json::array();
  for (const SlotReport& s : rep.slots) {
    nlohmann::json js;
    js["degree"] = s.degree;
    js["dim"] = s.dim;
    if (s.rank_out >= 0)
      js["rank_out"] = s.rank_out;
    else
      js["rank_out"] = nullptr;
    if (s.cohomology >= 0)
      js["cohomology"] = s.cohomology;
    else
      js["cohomology"] = nullptr;
    slots.push_back(std::move(js));
  }
  j["slots"] = std::move(slots);
  j["chi"] = rep.chi;
  j["expected"] = rep.expected;
  j["chi_consistent"] = rep.chi_consistent;
  j["pass"] = rep.pass;
  if (!rep.note.empty()) j["note"] = rep.note;
  if (!rep.counterexample.empty()) j["counterexample"] = rep.counterexample;
  return j;
}

nlohmann::json homog_to_json(const HomogReport& rep) {
  nlohmann::json j;
  j["name"] = "homog-elast";
  j["r"] = rep.r;
  j["degrees"] = rep.degrees;
  j["dims"] = rep.dims;
  j["poincare_in_slot"] = rep.poincare_in_slot;
  j["pass"] = rep.pass;
  return j;
}

std::string report_csv_header() { return "name,r,slot,dim,rank_out,cohomology,chi\n"; }

void report_to_csv(const SequenceReport& rep, std::string& out) {
  for (std::size_t i = 0; i < rep.slots.size(); ++i) {
    const SlotReport& s = rep.slots[i];
    std::ostringstream os;
    os << rep.name << ',' << rep.r << ',' << i << ',' << s.dim << ',';
    if (s.rank_out >= 0) os << s.rank_out;
    os << ',';
    if (s.cohomology >= 0) os << s.cohomology;
    os << ',' << rep.chi << '\n';
    out += os.str();
  }
}

}  // namespace bgg
