#include "bgg/grid.hpp"

#include <random>
#include <stdexcept>

namespace bgg {

namespace {

std::size_t su(int v) { return static_cast<std::size_t>(v); }

}  // namespace

void validate_grid(const GridComplex& g) {
  if (g.row.empty()) throw std::invalid_argument("grid: no rows");
  for (const FiniteComplex& r : g.row) {
    validate_complex(r);
    if (r.spaces() != g.spaces())
      throw std::invalid_argument("grid: rows must have equal length");
  }
}

VectorizedGrid vectorize(const GridComplex& g) {
  validate_grid(g);
  VectorizedGrid v;
  const int m = g.spaces();
  v.offset.assign(su(m), {});
  for (int i = 0; i < m; ++i) {
    int off = 0;
    for (int j = 0; j < g.rows(); ++j) {
      v.offset[su(i)].push_back(off);
      off += g.row[su(j)].dims[su(i)];
    }
    v.total.dims.push_back(off);
  }
  for (int i = 0; i + 1 < m; ++i) {
    LinearOp di(su(v.total.dims[su(i + 1)]), su(v.total.dims[su(i)]));
    for (int j = 0; j < g.rows(); ++j)
      di.insert_block(su(v.offset[su(i + 1)][su(j)]), su(v.offset[su(i)][su(j)]),
                      g.row[su(j)].d[su(i)]);
    v.total.d.push_back(std::move(di));
  }
  validate_complex(v.total);
  return v;
}

HomotopySet vectorize_homotopy(const GridComplex& g,
                               const std::vector<HomotopySet>& per_row) {
  if (per_row.size() != g.row.size())
    throw std::invalid_argument("vectorize_homotopy: one homotopy set per row");
  VectorizedGrid v = vectorize(g);
  const int m = g.spaces();
  HomotopySet h;
  for (int i = 0; i + 1 < m; ++i) {
    LinearOp Pi(su(v.total.dims[su(i)]), su(v.total.dims[su(i + 1)]));
    for (int j = 0; j < g.rows(); ++j)
      Pi.insert_block(su(v.offset[su(i)][su(j)]), su(v.offset[su(i + 1)][su(j)]),
                      per_row[su(j)].P[su(i)]);
    h.P.push_back(std::move(Pi));
  }
  for (int i = 0; i < m; ++i) {
    LinearOp Li(su(v.total.dims[su(i)]), su(v.total.dims[su(i)]));
    for (int j = 0; j < g.rows(); ++j)
      Li.insert_block(su(v.offset[su(i)][su(j)]), su(v.offset[su(i)][su(j)]),
                      per_row[su(j)].L[su(i)]);
    h.L.push_back(std::move(Li));
  }
  return h;
}

KFamily zero_kfamily(const GridComplex& g) {
  validate_grid(g);
  KFamily k;
  k.blocks.assign(su(g.spaces()), {});
  for (int i = 0; i < g.spaces(); ++i)
    for (int j = 1; j < g.rows(); ++j)
      k.blocks[su(i)].emplace_back(su(g.row[su(j - 1)].dims[su(i)]),
                                   su(g.row[su(j)].dims[su(i)]));
  return k;
}

namespace {

/// Vectorized K^i from the row-lowering blocks.
std::vector<LinearOp> assemble_k(const GridComplex& g, const VectorizedGrid& v,
                                 const KFamily& k) {
  if (k.blocks.size() != su(g.spaces()))
    throw std::invalid_argument("K-family: one block list per degree");
  std::vector<LinearOp> K;
  for (int i = 0; i < g.spaces(); ++i) {
    if (k.blocks[su(i)].size() + 1 != su(g.rows()))
      throw std::invalid_argument("K-family: one block per adjacent row pair");
    LinearOp Ki(su(v.total.dims[su(i)]), su(v.total.dims[su(i)]));
    for (int j = 1; j < g.rows(); ++j) {
      const LinearOp& blk = k.blocks[su(i)][su(j - 1)];
      if (blk.rows() != su(g.row[su(j - 1)].dims[su(i)]) ||
          blk.cols() != su(g.row[su(j)].dims[su(i)]))
        throw std::invalid_argument("K-family: block shape mismatch");
      Ki.insert_block(su(v.offset[su(i)][su(j - 1)]), su(v.offset[su(i)][su(j)]), blk);
    }
    K.push_back(std::move(Ki));
  }
  return K;
}

/// exp(M) for nilpotent M (M^bound = 0); exact rational series.
LinearOp exp_nilpotent(const LinearOp& M, int bound) {
  LinearOp acc = LinearOp::identity(M.rows());
  LinearOp power = LinearOp::identity(M.rows());
  Rational fact(1);
  for (int l = 1; l < bound; ++l) {
    power = power * M;
    fact *= Rational(l);
    acc = acc + power * (Rational(1) / fact);
  }
  return acc;
}

}  // namespace

TwistResult conjugate_by_expK(const GridComplex& g, const KFamily& k, const HomotopySet& h) {
  VectorizedGrid v = vectorize(g);
  const int m = g.spaces();
  const FiniteComplex& tot = v.total;
  {
    HomotopyReport rep = check_homotopy(tot, h);
    if (!rep.homotopy_ok)
      throw std::invalid_argument("conjugate_by_expK: input homotopy fails: " + rep.detail);
  }
  std::vector<LinearOp> K = assemble_k(g, v, k);

  TwistResult t;
  // S^i = d^i K^i - K^{i+1} d^i.
  for (int i = 0; i + 1 < m; ++i)
    t.S.push_back(tot.d[su(i)] * K[su(i)] - K[su(i + 1)] * tot.d[su(i)]);

  // Axiom: S K = K S (checked); theorems: S S = 0 and d S = -S d (asserted).
  for (int i = 0; i + 1 < m; ++i)
    if (t.S[su(i)] * K[su(i)] != K[su(i + 1)] * t.S[su(i)])
      throw std::invalid_argument("conjugate_by_expK: K-family violates S K = K S");
  for (int i = 0; i + 2 < m; ++i) {
    if (!(t.S[su(i + 1)] * t.S[su(i)]).is_zero())
      throw std::logic_error("conjugate_by_expK: S o S != 0");
    if (tot.d[su(i + 1)] * t.S[su(i)] != -(t.S[su(i + 1)] * tot.d[su(i)]))
      throw std::logic_error("conjugate_by_expK: d S != -S d");
  }

  // F = exp(K) with K nilpotent of order <= row count.
  for (int i = 0; i < m; ++i) {
    t.F.push_back(exp_nilpotent(K[su(i)], g.rows()));
    t.Finv.push_back(exp_nilpotent(-K[su(i)], g.rows()));
    if (t.F[su(i)] * t.Finv[su(i)] != LinearOp::identity(t.F[su(i)].rows()))
      throw std::logic_error("conjugate_by_expK: exp(K) exp(-K) != I");
  }

  // Twisted complex d_V = d - S; F is a cochain map (d - S) F = F d.
  t.twisted.dims = tot.dims;
  for (int i = 0; i + 1 < m; ++i) {
    t.twisted.d.push_back(tot.d[su(i)] - t.S[su(i)]);
    if (t.twisted.d[su(i)] * t.F[su(i)] != t.F[su(i + 1)] * tot.d[su(i)])
      throw std::logic_error("conjugate_by_expK: F d != d_V F");
  }
  validate_complex(t.twisted);

  // Conjugated homotopy set: P_V = F P F^{-1}, L_V = F L F^{-1}.
  for (int i = 0; i + 1 < m; ++i)
    t.h.P.push_back(t.F[su(i)] * h.P[su(i)] * t.Finv[su(i + 1)]);
  for (int i = 0; i < m; ++i) t.h.L.push_back(t.F[su(i)] * h.L[su(i)] * t.Finv[su(i)]);

  HomotopyReport rep = check_homotopy(t.twisted, t.h);
  if (!rep.homotopy_ok)
    throw std::logic_error("conjugate_by_expK: twisted homotopy identity lost");
  return t;
}

MatrixBGG matrix_bgg_step(const TwistResult& t) {
  const FiniteComplex& c = t.twisted;
  const int m = c.spaces();
  MatrixBGG r;

  // T^i = pinv(S^{i-1}) and the Upsilon projector I - S T - T S.
  std::vector<LinearOp> T(su(m));
  for (int i = 1; i < m; ++i) T[su(i)] = pseudo_inverse(t.S[su(i - 1)]);
  for (int i = 0; i < m; ++i) {
    LinearOp pi = LinearOp::identity(su(c.dims[su(i)]));
    if (i > 0) pi = pi - t.S[su(i - 1)] * T[su(i)];
    if (i + 1 < m) pi = pi - T[su(i + 1)] * t.S[su(i)];
    if (pi * pi != pi)
      throw std::logic_error("matrix_bgg_step: Upsilon projector not idempotent");
    r.proj.push_back(std::move(pi));
  }

  // Plain (untwisted) differential d = d_V + S for the G series.
  std::vector<LinearOp> dplain;
  for (int i = 0; i + 1 < m; ++i) dplain.push_back(c.d[su(i)] + t.S[su(i)]);

  // G^i = -sum_k (T^i d^{i-1})^k T^i, truncated at the fixed nilpotency bound.
  std::vector<LinearOp> G(su(m));
  for (int i = 1; i < m; ++i) {
    LinearOp term = T[su(i)];
    LinearOp acc = term;
    for (int k = 1; k < m; ++k) {
      term = T[su(i)] * dplain[su(i - 1)] * term;
      acc = acc + term;
    }
    G[su(i)] = -acc;
  }

  // A^i = I - G^{i+1} d_V^i and B^i = proj^i (I - d_V^{i-1} G^i).
  for (int i = 0; i < m; ++i) {
    LinearOp Ai = LinearOp::identity(su(c.dims[su(i)]));
    if (i + 1 < m) Ai = Ai - G[su(i + 1)] * c.d[su(i)];
    r.A.push_back(std::move(Ai));
    LinearOp Bi = LinearOp::identity(su(c.dims[su(i)]));
    if (i > 0) Bi = Bi - c.d[su(i - 1)] * G[su(i)];
    r.B.push_back(r.proj[su(i)] * Bi);
  }

  // Full-size script operators.
  std::vector<LinearOp> scriptD;
  for (int i = 0; i + 1 < m; ++i)
    scriptD.push_back(r.proj[su(i + 1)] * c.d[su(i)] * r.A[su(i)]);
  std::vector<LinearOp> scriptP, scriptL;
  for (int i = 0; i + 1 < m; ++i)
    scriptP.push_back(r.B[su(i)] * t.h.P[su(i)] * r.A[su(i + 1)]);
  for (int i = 0; i < m; ++i) scriptL.push_back(r.B[su(i)] * t.h.L[su(i)] * r.A[su(i)]);

  // Cochain identities on Upsilon (right-composed with the projector).
  for (int i = 0; i < m; ++i)
    if (r.B[su(i)] * r.A[su(i)] * r.proj[su(i)] != r.proj[su(i)])
      throw std::logic_error("matrix_bgg_step: B A != I on Upsilon");
  for (int i = 0; i + 1 < m; ++i) {
    if (c.d[su(i)] * r.A[su(i)] * r.proj[su(i)] !=
        r.A[su(i + 1)] * scriptD[su(i)] * r.proj[su(i)])
      throw std::logic_error("matrix_bgg_step: d_V A != A script-D on Upsilon");
    if (scriptD[su(i)] * r.B[su(i)] != r.B[su(i + 1)] * c.d[su(i)])
      throw std::logic_error("matrix_bgg_step: script-D B != B d_V");
  }

  // Restrict everything to bases of Upsilon^i.
  for (int i = 0; i < m; ++i) {
    auto rki = rank_kernel_image(r.proj[su(i)]);
    r.basis.push_back(LinearOp::from_columns(su(c.dims[su(i)]), rki.image));
    r.bgg.dims.push_back(static_cast<int>(rki.rank));
  }
  auto restrict_map = [&](const LinearOp& full, int src_deg, int tgt_deg) {
    auto sol = solve_exact(r.basis[su(tgt_deg)], full * r.basis[su(src_deg)]);
    if (!sol)
      throw std::logic_error("matrix_bgg_step: operator leaves Upsilon");
    return *sol;
  };
  for (int i = 0; i + 1 < m; ++i) r.bgg.d.push_back(restrict_map(scriptD[su(i)], i, i + 1));
  validate_complex(r.bgg);
  for (int i = 0; i + 1 < m; ++i) r.h.P.push_back(restrict_map(scriptP[su(i)], i + 1, i));
  for (int i = 0; i < m; ++i) r.h.L.push_back(restrict_map(scriptL[su(i)], i, i));

  // Homotopy identity with script-L, its annihilation by script-D, and
  // idempotence transport from L_V.
  HomotopyReport rep = check_homotopy(r.bgg, r.h);
  if (!rep.homotopy_ok)
    throw std::logic_error("matrix_bgg_step: script homotopy identity fails");
  bool lv_annihilated = true;
  for (int i = 0; i + 1 < m; ++i)
    if (!(c.d[su(i)] * t.h.L[su(i)]).is_zero() ||
        !(t.h.L[su(i + 1)] * c.d[su(i)]).is_zero())
      lv_annihilated = false;
  if (lv_annihilated) {
    for (int i = 0; i + 1 < m; ++i) {
      if (!(r.bgg.d[su(i)] * r.h.L[su(i)]).is_zero() ||
          !(r.h.L[su(i + 1)] * r.bgg.d[su(i)]).is_zero())
        throw std::logic_error("matrix_bgg_step: script-L script-D annihilation fails");
    }
  }
  bool lv_idempotent = true;
  for (int i = 0; i < m; ++i)
    if (t.h.L[su(i)] * t.h.L[su(i)] != t.h.L[su(i)]) lv_idempotent = false;
  if (lv_idempotent && lv_annihilated) {
    for (int i = 0; i < m; ++i)
      if (r.h.L[su(i)] * r.h.L[su(i)] != r.h.L[su(i)])
        throw std::logic_error("matrix_bgg_step: idempotence of L_V not inherited");
  }
  return r;
}

AbstractInstanceReport run_abstract_instance(std::uint64_t seed) {
  AbstractInstanceReport rep;
  auto fail = [&rep](const std::string& s) {
    if (rep.pass) {
      rep.pass = false;
      rep.detail = s;
    }
  };
  std::mt19937_64 rng(seed);
  auto draw_dims = [&rng](int len) {
    std::vector<int> dims;
    for (int i = 0; i < len; ++i) dims.push_back(1 + static_cast<int>(rng() % 5));
    return dims;
  };
  try {
    // One random complex: Hodge homotopy, subcomplex, hat/tilde modification.
    const int len = 3 + static_cast<int>(rng() % 2);
    RandomComplex rc = random_complex(rng(), draw_dims(len));
    HomotopySet h = hodge_homotopy(rc.c);
    HomotopyReport hr = check_homotopy(rc.c, h);
    if (!hr.homotopy_ok) fail("d.P + P.d = I - L fails: " + hr.detail);
    else if (!hr.dl_commutes) fail("d.L = L.d fails: " + hr.detail);
    for (const LinearOp& L : h.L)
      if (L * L != L) fail("L.L = L fails");
    if (cohomology_dims(rc.c) != rc.cohomology)
      fail("computed cohomology differs from the construction");
    SubcomplexResult sc = subcomplex_from_L(rc.c, h);
    if (!sc.equal) fail("subcomplex cohomology differs from the full complex");
    (void)modify_hat_tilde(rc.c, h);  // postconditions asserted inside

    // A two-row grid with a random K (any K commutes with S on two rows),
    // conjugated by exp(K) and restricted by the matrix BGG step.
    const int m = 3 + static_cast<int>(rng() % 2);
    RandomComplex top = random_complex(rng(), draw_dims(m));
    RandomComplex bottom = random_complex(rng(), draw_dims(m));
    GridComplex g;
    g.row = {top.c, bottom.c};
    validate_grid(g);
    KFamily k = zero_kfamily(g);
    for (int i = 0; i < m; ++i) {
      LinearOp& blk = k.blocks[su(i)][0];
      for (std::size_t a = 0; a < blk.rows(); ++a)
        for (std::size_t b = 0; b < blk.cols(); ++b) {
          int lam = static_cast<int>(rng() % 5) - 2;
          if (lam != 0) blk.set(a, b, Rational(lam));
        }
    }
    std::vector<HomotopySet> per_row{hodge_homotopy(top.c), hodge_homotopy(bottom.c)};
    TwistResult tr = conjugate_by_expK(g, k, vectorize_homotopy(g, per_row));
    HomotopyReport tw = check_homotopy(tr.twisted, tr.h);
    if (!tw.homotopy_ok || !tw.dl_commutes)
      fail("conjugated homotopy fails on the twisted complex");
    std::vector<int> want;
    for (int i = 0; i < m; ++i)
      want.push_back(top.cohomology[su(i)] + bottom.cohomology[su(i)]);
    if (cohomology_dims(tr.twisted) != want)
      fail("twisted cohomology differs from the row sum");
    MatrixBGG mb = matrix_bgg_step(tr);
    HomotopyReport br = check_homotopy(mb.bgg, mb.h);
    if (!br.homotopy_ok || !br.dl_commutes)
      fail("restricted homotopy fails after the BGG step");
  } catch (const std::exception& e) {
    fail(std::string("exception: ") + e.what());
  }
  return rep;
}

}  // namespace bgg
