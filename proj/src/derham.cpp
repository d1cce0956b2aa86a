#include "bgg/derham.hpp"

#include <stdexcept>

namespace bgg {

PolyForm exterior_d(const PolyForm& u) {
  PolyForm out(u.n(), u.k() + 1, u.value());
  for (const auto& [key, p] : u.terms()) {
    const auto [mask, a] = key;
    for (int t = 0; t < u.n(); ++t) {
      const Poly q = p.derivative(t);
      if (q.is_zero()) continue;
      IndexMask nm;
      const int s = wedge_sign(mask, t, &nm);
      if (s != 0) out.add_coeff(nm, a, q * Rational(s));
    }
  }
  return out;
}

namespace {

// Shared loop for contraction-type operators: weight(r) scales the
// degree-r homogeneous part of each coefficient.
template <typename WeightFn>
PolyForm contract_euler(const PolyForm& u, WeightFn weight) {
  if (u.k() == 0)
    throw std::invalid_argument("contraction is undefined on 0-forms");
  PolyForm out(u.n(), u.k() - 1, u.value());
  for (const auto& [key, p] : u.terms()) {
    const auto [mask, a] = key;
    for (const auto& [r, pr] : p.homogeneous_components()) {
      const Rational w = weight(r);
      if (w == 0) continue;
      // i_E(dx_I) = sum over i in I of (-1)^pos x_i dx_{I minus i}.
      int pos = 0;
      for (int i = 0; i < u.n(); ++i) {
        const IndexMask bit = IndexMask{1} << i;
        if (!(mask & bit)) continue;
        const Rational sw = (pos % 2 == 0) ? w : -w;
        out.add_coeff(mask & ~bit, a, pr.mul_variable(i) * sw);
        ++pos;
      }
    }
  }
  return out;
}

}  // namespace

PolyForm interior_euler(const PolyForm& u) {
  return contract_euler(u, [](int) { return Rational(1); });
}

PolyForm koszul_poincare(const PolyForm& u) {
  const int k = u.k();
  return contract_euler(u, [k](int r) { return Rational(1, r + k); });
}

DerhamCheck homotopy_check_derham(int n, int max_degree) {
  DerhamCheck out;
  out.n = n;
  out.max_degree = max_degree;
  const auto monomials = monomial_basis(n, max_degree, BasisMode::UpTo);
  for (int k = 0; k <= n; ++k) {
    DerhamCheckEntry entry;
    entry.k = k;
    for (const IndexMask mask : index_sets(n, k)) {
      for (const auto& m : monomials) {
        PolyForm u(n, k, ValueTag::R);
        u.set_coeff(mask, 0, Poly::monomial(m, Rational(1)));
        PolyForm lhs(n, k, ValueTag::R), rhs(n, k, ValueTag::R);
        if (k == 0) {
          // P d u = u - u(0).
          lhs = koszul_poincare(exterior_d(u));
          rhs = u;
          Poly c0 = Poly::constant(n, u.coeff(0, 0).eval_zero());
          rhs.add_coeff(0, 0, -c0);
        } else {
          lhs = exterior_d(koszul_poincare(u)) + koszul_poincare(exterior_d(u));
          rhs = u;
        }
        ++entry.cases;
        if (lhs != rhs) {
          entry.pass = false;
          if (entry.counterexample.empty())
            entry.counterexample = "k=" + std::to_string(k) + " u=" + u.to_string();
        }
      }
    }
    out.pass = out.pass && entry.pass;
    out.entries.push_back(std::move(entry));
  }
  return out;
}

}  // namespace bgg
