#include "bgg/proxy.hpp"

#include <stdexcept>

namespace bgg {

ProxyField ProxyField::scalar(const Poly& p) {
  return ProxyField{AmbientKind::Scalar, p.nvars(), {p}};
}

ProxyField ProxyField::vector(int n, std::vector<Poly> c) {
  if (static_cast<int>(c.size()) != n)
    throw std::invalid_argument("vector proxy needs n components");
  return ProxyField{AmbientKind::Vector, n, std::move(c)};
}

ProxyField ProxyField::matrix(int n, std::vector<Poly> c) {
  if (static_cast<int>(c.size()) != n * n)
    throw std::invalid_argument("matrix proxy needs n*n components");
  return ProxyField{AmbientKind::Matrix, n, std::move(c)};
}

bool ProxyField::is_zero() const {
  for (const auto& p : comp)
    if (!p.is_zero()) return false;
  return true;
}

bool ProxyField::operator==(const ProxyField& o) const {
  return kind == o.kind && n == o.n && comp == o.comp;
}

namespace {

// Hodge data for (n-1)-forms: for each missing variable l, the index set
// full \ {l} and the sign with dx_{l+1} ^ dx_I = sign * volume form.
struct HodgeTerm {
  IndexMask mask;
  int sign;
};

std::vector<HodgeTerm> hodge_terms(int n) {
  const IndexMask full = (IndexMask{1} << n) - 1;
  std::vector<HodgeTerm> out;
  for (int l = 0; l < n; ++l) {
    const IndexMask mask = full & ~(IndexMask{1} << l);
    IndexMask dummy;
    out.push_back({mask, wedge_sign(mask, l, &dummy)});
  }
  return out;
}

[[noreturn]] void no_proxy(const PolyForm& f) {
  throw std::invalid_argument("no proxy representation for a degree-" +
                              std::to_string(f.k()) + " form with values in " +
                              to_string(f.value()));
}

}  // namespace

ProxyField form_to_proxy(const PolyForm& f) {
  const int n = f.n(), k = f.k();
  if (n > 3) throw std::invalid_argument("proxies are defined for n <= 3");
  const ValueSpace& W = f.value_space();

  if (W.ambient == AmbientKind::Matrix) {
    if (k != 0) no_proxy(f);
    std::vector<Poly> coords = f.coordinates();
    return ProxyField::matrix(n, value_embed(W, coords, n));
  }

  const bool scalar_valued = (f.value() == ValueTag::R);
  const int vd = f.value_dim();

  // The k-form part contributes a scalar (k = 0 or k = n) or a vector
  // (k = 1 or k = n-1 with the Hodge signs) of coefficients per value index.
  enum class FormPart { Scalar, Vector } part;
  if (k == 0 || k == n)
    part = FormPart::Scalar;
  else if (k == 1 || k == n - 1)
    part = FormPart::Vector;
  else
    no_proxy(f);  // unreachable for n <= 3

  std::vector<Poly> formwise;  // one entry (scalar) or n entries per value index
  const int fp = (part == FormPart::Scalar) ? 1 : n;
  formwise.assign(static_cast<std::size_t>(fp * vd), Poly(n));
  const auto put = [&](int l, int a, const Poly& p) {
    formwise[static_cast<std::size_t>(l * vd + a)] = p;
  };
  if (part == FormPart::Scalar) {
    const IndexMask mask = (k == 0) ? 0 : ((IndexMask{1} << n) - 1);
    for (int a = 0; a < vd; ++a) put(0, a, f.coeff(mask, a));
  } else if (k == 1) {
    for (int i = 0; i < n; ++i)
      for (int a = 0; a < vd; ++a) put(i, a, f.coeff(IndexMask{1} << i, a));
  } else {  // k == n-1 with n == 3 (k=2); n=2 has k=1 handled above
    const auto ht = hodge_terms(n);
    for (int l = 0; l < n; ++l)
      for (int a = 0; a < vd; ++a)
        put(l, a, f.coeff(ht[static_cast<std::size_t>(l)].mask, a) *
                      Rational(ht[static_cast<std::size_t>(l)].sign));
  }

  if (scalar_valued) {
    if (part == FormPart::Scalar) return ProxyField::scalar(formwise[0]);
    return ProxyField::vector(n, std::move(formwise));
  }
  // Vector-valued: scalar form part -> vector proxy; vector form part ->
  // matrix proxy with form index as row, value index as column.
  if (part == FormPart::Scalar) return ProxyField::vector(n, std::move(formwise));
  return ProxyField::matrix(n, std::move(formwise));
}

PolyForm proxy_to_form(const ProxyField& p, int k, ValueTag value) {
  const int n = p.n;
  PolyForm f(n, k, value);
  const ValueSpace& W = f.value_space();

  if (W.ambient == AmbientKind::Matrix) {
    if (k != 0 || p.kind != AmbientKind::Matrix)
      throw std::invalid_argument("matrix proxy corresponds to a matrix-valued 0-form");
    auto coords = value_coords(W, p.comp, n);
    if (!coords)
      throw std::invalid_argument("matrix field is not valued in " + to_string(value));
    return PolyForm::from_coordinates(n, 0, value, *coords);
  }

  const bool scalar_valued = (value == ValueTag::R);
  const int vd = W.dim();
  const bool scalar_part = (k == 0 || k == n);
  if (!scalar_part && k != 1 && k != n - 1)
    throw std::invalid_argument("no proxy representation at this form degree");

  const auto expect =
      [&](AmbientKind kind) {
        if (p.kind != kind) throw std::invalid_argument("proxy kind mismatch");
      };
  const auto get = [&](int l, int a) -> const Poly& {
    return p.comp[static_cast<std::size_t>(l * vd + a)];
  };

  if (scalar_valued)
    expect(scalar_part ? AmbientKind::Scalar : AmbientKind::Vector);
  else
    expect(scalar_part ? AmbientKind::Vector : AmbientKind::Matrix);

  if (scalar_part) {
    const IndexMask mask = (k == 0) ? 0 : ((IndexMask{1} << n) - 1);
    for (int a = 0; a < vd; ++a) f.set_coeff(mask, a, get(0, a));
  } else if (k == 1) {
    for (int i = 0; i < n; ++i)
      for (int a = 0; a < vd; ++a) f.set_coeff(IndexMask{1} << i, a, get(i, a));
  } else {
    const auto ht = hodge_terms(n);
    for (int l = 0; l < n; ++l)
      for (int a = 0; a < vd; ++a)
        f.set_coeff(ht[static_cast<std::size_t>(l)].mask, a,
                    get(l, a) * Rational(ht[static_cast<std::size_t>(l)].sign));
  }
  return f;
}

// ---------------------------------------------------------------------------
// Differential operators on proxies (independent of the form machinery).

namespace {

ProxyField grad_field(const ProxyField& u) {
  const int n = u.n;
  if (u.kind == AmbientKind::Scalar) {
    std::vector<Poly> c;
    for (int i = 0; i < n; ++i) c.push_back(u.comp[0].derivative(i));
    return ProxyField::vector(n, std::move(c));
  }
  if (u.kind == AmbientKind::Vector) {
    std::vector<Poly> c(static_cast<std::size_t>(n * n), Poly(n));
    for (int i = 0; i < n; ++i)
      for (int a = 0; a < n; ++a)
        c[static_cast<std::size_t>(i * n + a)] = u.at(a).derivative(i);
    return ProxyField::matrix(n, std::move(c));
  }
  throw std::invalid_argument("grad: unsupported field kind");
}

ProxyField div_field(const ProxyField& u) {
  const int n = u.n;
  if (u.kind == AmbientKind::Vector) {
    Poly s(n);
    for (int i = 0; i < n; ++i) s += u.at(i).derivative(i);
    return ProxyField::scalar(s);
  }
  if (u.kind == AmbientKind::Matrix) {
    // Column-wise divergence.
    std::vector<Poly> c(static_cast<std::size_t>(n), Poly(n));
    for (int a = 0; a < n; ++a)
      for (int i = 0; i < n; ++i) c[static_cast<std::size_t>(a)] += u.at(i, a).derivative(i);
    return ProxyField::vector(n, std::move(c));
  }
  throw std::invalid_argument("div: unsupported field kind");
}

ProxyField curl_field(const ProxyField& u) {
  const int n = u.n;
  if (n != 3) throw std::invalid_argument("curl needs n = 3");
  if (u.kind == AmbientKind::Vector) {
    std::vector<Poly> c(3, Poly(3));
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        for (int k = 0; k < 3; ++k) {
          const int e = levi_civita(i, j, k);
          if (e != 0) c[static_cast<std::size_t>(i)] += u.at(k).derivative(j) * Rational(e);
        }
    return ProxyField::vector(3, std::move(c));
  }
  if (u.kind == AmbientKind::Matrix) {
    // Column-wise curl.
    std::vector<Poly> c(9, Poly(3));
    for (int a = 0; a < 3; ++a)
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
          for (int k = 0; k < 3; ++k) {
            const int e = levi_civita(i, j, k);
            if (e != 0)
              c[static_cast<std::size_t>(i * 3 + a)] += u.at(k, a).derivative(j) * Rational(e);
          }
    return ProxyField::matrix(3, std::move(c));
  }
  throw std::invalid_argument("curl: unsupported field kind");
}

ProxyField transpose_field(const ProxyField& u) {
  if (u.kind != AmbientKind::Matrix)
    throw std::invalid_argument("transpose: needs a matrix field");
  const int n = u.n;
  std::vector<Poly> c(static_cast<std::size_t>(n * n), Poly(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) c[static_cast<std::size_t>(i * n + j)] = u.at(j, i);
  return ProxyField::matrix(n, std::move(c));
}

ProxyField value_map_field(std::string_view name, const ProxyField& u) {
  const ValueMap vm = proxy_map(name, u.n);
  const ValueSpace& src = value_space(vm.source, u.n);
  if (src.ambient != u.kind) throw std::invalid_argument("field kind mismatch");
  // Canonical coords of R/V/M equal ambient components, so apply directly.
  auto out = vm.matrix.apply(u.comp, u.n);
  const ValueSpace& tgt = value_space(vm.target, u.n);
  switch (tgt.ambient) {
    case AmbientKind::Scalar: return ProxyField::scalar(out[0]);
    case AmbientKind::Vector: return ProxyField::vector(u.n, std::move(out));
    case AmbientKind::Matrix: return ProxyField::matrix(u.n, std::move(out));
  }
  throw std::logic_error("bad ambient");
}

}  // namespace

ProxyField apply_proxy_operator(std::string_view name, const ProxyField& u) {
  if (name == "grad") return grad_field(u);
  if (name == "div") return div_field(u);
  if (name == "curl") return curl_field(u);
  if (name == "def") return value_map_field("sym", grad_field(u));
  if (name == "hess") return grad_field(grad_field(u));
  if (name == "inc") return curl_field(transpose_field(curl_field(u)));
  if (name == "divdiv") return div_field(div_field(u));
  if (name == "symcurl") return value_map_field("sym", curl_field(u));
  if (name == "devgrad") return value_map_field("dev", grad_field(u));
  if (name == "devhess") return value_map_field("dev", grad_field(grad_field(u)));
  if (name == "devdef") return value_map_field("dev", value_map_field("sym", grad_field(u)));
  if (name == "transpose") return transpose_field(u);
  if (name == "sym" || name == "skw" || name == "dev" || name == "tr" ||
      name == "mskw" || name == "vskw" || name == "iota" || name == "scal_S")
    return value_map_field(name, u);
  throw std::invalid_argument("unknown operator '" + std::string(name) + "'");
}

}  // namespace bgg
