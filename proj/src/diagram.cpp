#include "bgg/diagram.hpp"

#include <nlohmann/json.hpp>

#include <stdexcept>

#include "bgg/derham.hpp"
#include "bgg/proxy.hpp"

namespace bgg {

namespace {

int form_dim(int n, int k, ValueTag value) {
  return static_cast<int>(index_sets(n, k).size()) * value_space(value, n).dim();
}

}  // namespace

int DiagramSpec::slot_form_dim(int i, int j) const {
  return form_dim(n, i, row_value[static_cast<std::size_t>(j)]);
}

ValueTag DiagramSpec::slot_proxy_tag(int i, int j) const {
  const ValueTag rv = row_value[static_cast<std::size_t>(j)];
  const bool scalar_part = (i == 0 || i == n);
  if (rv == ValueTag::R) {
    if (scalar_part) return ValueTag::R;
    return ValueTag::V;
  }
  if (scalar_part) return ValueTag::V;
  return ValueTag::M;
}

LinearOp proxy_iso(int n, int k, ValueTag value) {
  const auto& sets = index_sets(n, k);
  const int vd = value_space(value, n).dim();
  const std::size_t fdim = sets.size() * static_cast<std::size_t>(vd);
  // Build by converting each basis form; proxies of R/V-valued forms are
  // signed permutations, so the matrix is exactly invertible.
  LinearOp iso(0, 0);
  bool sized = false;
  for (std::size_t s = 0; s < sets.size(); ++s)
    for (int a = 0; a < vd; ++a) {
      PolyForm f(n, k, value);
      f.set_coeff(sets[s], a, Poly::constant(n, Rational(1)));
      const ProxyField p = form_to_proxy(f);
      if (!sized) {
        iso = LinearOp(p.comp.size(), fdim);
        sized = true;
      }
      const std::size_t col = s * static_cast<std::size_t>(vd) + static_cast<std::size_t>(a);
      for (std::size_t r = 0; r < p.comp.size(); ++r) {
        const Rational c = p.comp[r].eval_zero();
        if (c != 0) iso.set(r, col, c);
      }
    }
  if (!sized) {
    // Degenerate slot (k > n): no coordinates at all.
    iso = LinearOp(0, 0);
  }
  return iso;
}

PolyForm apply_slot_map(const LinearOp& m, const PolyForm& u, int out_k, ValueTag out_value) {
  const auto coords = u.coordinates();
  if (coords.size() != m.cols()) throw std::invalid_argument("slot map shape mismatch");
  return PolyForm::from_coordinates(u.n(), out_k, out_value, m.apply(coords, u.n()));
}

LinearOp DiagramSpec::s_proxy(int i, int g) const {
  const ValueTag src = row_value[static_cast<std::size_t>(g + 1)];
  const ValueTag tgt = row_value[static_cast<std::size_t>(g)];
  const LinearOp pt = proxy_iso(n, i + 1, tgt);
  const LinearOp ps = proxy_iso(n, i, src);
  return pt * s_form[static_cast<std::size_t>(i)][static_cast<std::size_t>(g)] *
         exact_inverse(ps);
}

namespace {

// Form-level matrix of S(w (x) v) = sum_c (dx_{c+1} ^ w) (x) phi_c(v).
LinearOp s_from_phi(int n, int i, ValueTag top, ValueTag bottom,
                    const std::vector<LinearOp>& phi) {
  const auto& src_sets = index_sets(n, i);
  const auto& tgt_sets = index_sets(n, i + 1);
  const int sd = value_space(bottom, n).dim();
  const int td = value_space(top, n).dim();
  LinearOp m(tgt_sets.size() * static_cast<std::size_t>(td),
             src_sets.size() * static_cast<std::size_t>(sd));
  // Positions of target index sets for lookup.
  std::map<IndexMask, std::size_t> tpos;
  for (std::size_t t = 0; t < tgt_sets.size(); ++t) tpos[tgt_sets[t]] = t;
  for (std::size_t s = 0; s < src_sets.size(); ++s)
    for (int c = 0; c < n; ++c) {
      IndexMask nm;
      const int sign = wedge_sign(src_sets[s], c, &nm);
      if (sign == 0) continue;
      const std::size_t t = tpos.at(nm);
      for (const auto& [rc, v] : phi[static_cast<std::size_t>(c)].entries()) {
        const auto [b, a] = rc;  // phi_c : bottom -> top, entry (b, a)
        m.add_to(t * static_cast<std::size_t>(td) + b,
                 s * static_cast<std::size_t>(sd) + static_cast<std::size_t>(a),
                 v * Rational(sign));
      }
    }
  return m;
}

void finalize_diagram(DiagramSpec& D) {
  D.t_form.assign(D.s_form.size(), {});
  for (std::size_t i = 0; i < D.s_form.size(); ++i)
    for (const auto& s : D.s_form[i]) D.t_form[i].push_back(pseudo_inverse(s));
  validate_diagram(D);
}

}  // namespace

DiagramSpec two_row_diagram(std::string name, int n, ValueTag top, ValueTag bottom,
                            const std::vector<LinearOp>& phi) {
  if (static_cast<int>(phi.size()) != n)
    throw std::invalid_argument("need one phi map per variable");
  DiagramSpec D;
  D.n = n;
  D.name = std::move(name);
  D.row_value = {top, bottom};
  D.s_form.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    D.s_form[static_cast<std::size_t>(i)] = {s_from_phi(n, i, top, bottom, phi)};
  finalize_diagram(D);
  return D;
}

DiagramSpec builtin_diagram(std::string_view name) {
  const int n = 3;
  std::vector<LinearOp> phi;
  if (name == "hessian") {
    // phi_c(v) = v_c : V -> R.
    for (int c = 0; c < n; ++c) {
      LinearOp m(1, 3);
      m.set(0, static_cast<std::size_t>(c), Rational(1));
      phi.push_back(std::move(m));
    }
    return two_row_diagram("hessian", n, ValueTag::R, ValueTag::V, phi);
  }
  if (name == "elasticity") {
    // phi_c(v) = v x e_c : V -> V.
    for (int c = 0; c < n; ++c) {
      LinearOp m(3, 3);
      for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b) {
          const int e = levi_civita(a, b, c);
          if (e != 0) m.set(static_cast<std::size_t>(a), static_cast<std::size_t>(b), Rational(e));
        }
      phi.push_back(std::move(m));
    }
    return two_row_diagram("elasticity", n, ValueTag::V, ValueTag::V, phi);
  }
  if (name == "divdiv") {
    // phi_c(s) = s e_c : R -> V.
    for (int c = 0; c < n; ++c) {
      LinearOp m(3, 1);
      m.set(static_cast<std::size_t>(c), 0, Rational(1));
      phi.push_back(std::move(m));
    }
    return two_row_diagram("divdiv", n, ValueTag::V, ValueTag::R, phi);
  }
  throw std::invalid_argument("unknown diagram '" + std::string(name) +
                              "' (builtins: hessian, elasticity, divdiv)");
}

void validate_diagram(const DiagramSpec& D) {
  const int n = D.n, N = D.rows() - 1;
  if (N < 1) throw std::invalid_argument("grid needs at least two rows");
  for (ValueTag t : D.row_value)
    if (t != ValueTag::R && t != ValueTag::V)
      throw std::invalid_argument("row values must be R or V");
  if (static_cast<int>(D.s_form.size()) != n)
    throw std::invalid_argument("s maps must cover form degrees 0..n-1");
  for (const auto& level : D.s_form)
    if (static_cast<int>(level.size()) != N)
      throw std::invalid_argument("s maps must cover every row gap");

  // Shapes.
  for (int i = 0; i < n; ++i)
    for (int g = 0; g < N; ++g) {
      const auto& m = D.s_form[static_cast<std::size_t>(i)][static_cast<std::size_t>(g)];
      if (m.rows() != static_cast<std::size_t>(D.slot_form_dim(i + 1, g)) ||
          m.cols() != static_cast<std::size_t>(D.slot_form_dim(i, g + 1)))
        throw std::invalid_argument("s map shape mismatch");
    }

  // Anticommutation d S = -S d, checked on form bases with coefficients of
  // degree <= 2 (S is constant-coefficient and d is first order, so this
  // implies the identity on all polynomial coefficients).
  const auto monomials = monomial_basis(n, 2, BasisMode::UpTo);
  for (int g = 0; g < N; ++g) {
    const ValueTag src = D.row_value[static_cast<std::size_t>(g + 1)];
    const ValueTag tgt = D.row_value[static_cast<std::size_t>(g)];
    const int vd = value_space(src, n).dim();
    for (int i = 0; i < n; ++i) {
      const auto& S_i = D.s_form[static_cast<std::size_t>(i)][static_cast<std::size_t>(g)];
      for (const IndexMask mask : index_sets(n, i))
        for (int a = 0; a < vd; ++a)
          for (const auto& m : monomials) {
            PolyForm u(n, i, src);
            u.set_coeff(mask, a, Poly::monomial(m, Rational(1)));
            const PolyForm su = apply_slot_map(S_i, u, i + 1, tgt);
            PolyForm dsu = exterior_d(su);
            const PolyForm du = exterior_d(u);
            if (i + 1 < n) {
              const auto& S_next =
                  D.s_form[static_cast<std::size_t>(i + 1)][static_cast<std::size_t>(g)];
              dsu += apply_slot_map(S_next, du, i + 2, tgt);
            }
            if (!dsu.is_zero())
              throw std::invalid_argument("grid maps do not anticommute with d");
          }
    }
  }

  // S o S = 0 across consecutive row gaps.
  for (int g = 0; g + 1 < N; ++g)
    for (int i = 0; i + 1 < n; ++i) {
      const LinearOp prod =
          D.s_form[static_cast<std::size_t>(i + 1)][static_cast<std::size_t>(g)] *
          D.s_form[static_cast<std::size_t>(i)][static_cast<std::size_t>(g + 1)];
      if (!prod.is_zero()) throw std::invalid_argument("S o S != 0 across rows");
    }
}

// ---------------------------------------------------------------------------
// JSON.

DiagramSpec diagram_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw std::invalid_argument("diagram JSON must be an object");
  if (j.contains("name") && !j.contains("rows")) {
    const auto name = j.at("name").get<std::string>();
    if (j.contains("n") && j.at("n").get<int>() != 3)
      throw std::invalid_argument("builtin diagrams have n = 3");
    return builtin_diagram(name);
  }
  const int n = j.at("n").get<int>();
  if (n < 1 || n > 3) throw std::invalid_argument("diagram JSON: need 1 <= n <= 3");
  const auto rows = j.at("rows");
  if (!rows.is_array() || rows.size() < 2)
    throw std::invalid_argument("diagram JSON: need at least two rows");

  DiagramSpec D;
  D.n = n;
  D.name = j.value("name", std::string("custom"));
  for (const auto& slots : rows) {
    if (!slots.is_array() || static_cast<int>(slots.size()) != n + 1)
      throw std::invalid_argument("diagram JSON: each row needs n+1 slots");
    D.row_value.push_back(value_tag_from_string(slots[0].get<std::string>()));
  }
  // Validate the displayed slots against the proxy spaces of each row.
  for (std::size_t jrow = 0; jrow < rows.size(); ++jrow)
    for (int i = 0; i <= n; ++i) {
      const auto tag = value_tag_from_string(rows[jrow][static_cast<std::size_t>(i)]
                                                 .get<std::string>());
      if (tag != D.slot_proxy_tag(i, static_cast<int>(jrow)))
        throw std::invalid_argument("diagram JSON: slot value space mismatch at row " +
                                    std::to_string(jrow) + ", degree " + std::to_string(i));
    }

  const int N = D.rows() - 1;
  D.s_form.assign(static_cast<std::size_t>(n), std::vector<LinearOp>());
  std::vector<std::vector<bool>> seen(static_cast<std::size_t>(n),
                                      std::vector<bool>(static_cast<std::size_t>(N), false));
  for (auto& level : D.s_form)
    level.assign(static_cast<std::size_t>(N), LinearOp());

  for (const auto& sm : j.at("s_maps")) {
    const int i = sm.at("i").get<int>();
    const int row = sm.at("j").get<int>();
    if (i < 0 || i >= n || row < 1 || row > N)
      throw std::invalid_argument("diagram JSON: s map index out of range");
    const int g = row - 1;
    const ValueTag src_tag = D.slot_proxy_tag(i, row);
    const ValueTag tgt_tag = D.slot_proxy_tag(i + 1, row - 1);
    const int sd = value_space(src_tag, n).dim();
    const int td = value_space(tgt_tag, n).dim();
    const auto& rowsj = sm.at("matrix");
    if (static_cast<int>(rowsj.size()) != td)
      throw std::invalid_argument("diagram JSON: s matrix row count mismatch");
    LinearOp proxy_mat(static_cast<std::size_t>(td), static_cast<std::size_t>(sd));
    for (int r = 0; r < td; ++r) {
      const auto& rowj = rowsj[static_cast<std::size_t>(r)];
      if (static_cast<int>(rowj.size()) != sd)
        throw std::invalid_argument("diagram JSON: s matrix column count mismatch");
      for (int c = 0; c < sd; ++c) {
        const Rational v = rational_from_string(rowj[static_cast<std::size_t>(c)]
                                                    .get<std::string>());
        if (v != 0) proxy_mat.set(static_cast<std::size_t>(r), static_cast<std::size_t>(c), v);
      }
    }
    // Convert the proxy-level matrix to the form-level bases.
    const LinearOp pt = proxy_iso(n, i + 1, D.row_value[static_cast<std::size_t>(row - 1)]);
    const LinearOp ps = proxy_iso(n, i, D.row_value[static_cast<std::size_t>(row)]);
    D.s_form[static_cast<std::size_t>(i)][static_cast<std::size_t>(g)] =
        exact_inverse(pt) * proxy_mat * ps;
    seen[static_cast<std::size_t>(i)][static_cast<std::size_t>(g)] = true;
  }
  for (int i = 0; i < n; ++i)
    for (int g = 0; g < N; ++g)
      if (!seen[static_cast<std::size_t>(i)][static_cast<std::size_t>(g)])
        throw std::invalid_argument("diagram JSON: missing s map at degree " +
                                    std::to_string(i) + ", row " + std::to_string(g + 1));

  D.t_form.assign(D.s_form.size(), {});
  for (std::size_t i = 0; i < D.s_form.size(); ++i)
    for (const auto& s : D.s_form[i]) D.t_form[i].push_back(pseudo_inverse(s));
  validate_diagram(D);
  return D;
}

nlohmann::json diagram_to_json(const DiagramSpec& D) {
  nlohmann::json j;
  j["name"] = D.name;
  j["n"] = D.n;
  nlohmann::json rows = nlohmann::json::array();
  for (int r = 0; r < D.rows(); ++r) {
    nlohmann::json slots = nlohmann::json::array();
    for (int i = 0; i <= D.n; ++i) slots.push_back(to_string(D.slot_proxy_tag(i, r)));
    rows.push_back(std::move(slots));
  }
  j["rows"] = std::move(rows);
  nlohmann::json smaps = nlohmann::json::array();
  for (int i = 0; i < D.n; ++i)
    for (int g = 0; g + 1 < D.rows(); ++g) {
      const LinearOp m = D.s_proxy(i, g);
      nlohmann::json mj = nlohmann::json::array();
      for (std::size_t r = 0; r < m.rows(); ++r) {
        nlohmann::json rowj = nlohmann::json::array();
        for (std::size_t c = 0; c < m.cols(); ++c)
          rowj.push_back(rational_to_string(m.at(r, c)));
        mj.push_back(std::move(rowj));
      }
      smaps.push_back(nlohmann::json{{"i", i}, {"j", g + 1}, {"matrix", std::move(mj)}});
    }
  j["s_maps"] = std::move(smaps);
  return j;
}

}  // namespace bgg
