// Implements the command-line driver: `verify` runs the identity suites,
// `apply` applies a named operator to a serialized element, and `dims` emits
// dimension/rank/cohomology tables.  Reports are deterministic for a fixed
// configuration and seed (worker threads only change the schedule, never the
// output), and every check embeds the verbatim identity it tests.
#include "bgg/cli.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <nlohmann/json.hpp>

#include "CLI11.hpp"
#include "bgg/bgg.hpp"
#include "bgg/derham.hpp"
#include "bgg/grid.hpp"
#include "bgg/verify.hpp"

namespace bgg {

namespace {

using nlohmann::json;

std::size_t su(int v) { return static_cast<std::size_t>(v); }

int env_threads() {
  const char* v = std::getenv("BGG_NUM_THREADS");
  if (!v) return 1;
  try {
    int t = std::stoi(v);
    return t >= 1 ? t : 1;
  } catch (...) {
    return 1;
  }
}

/// Runs fn(0..count-1) on a small worker pool; exceptions are rethrown for
/// the smallest failing index, so behaviour matches the sequential loop.
void parallel_for(int nthreads, int count, const std::function<void(int)>& fn) {
  if (nthreads <= 1 || count <= 1) {
    for (int i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<int> next{0};
  std::vector<std::exception_ptr> errs(su(count));
  auto work = [&] {
    for (int i = next.fetch_add(1); i < count; i = next.fetch_add(1)) {
      try {
        fn(i);
      } catch (...) {
        errs[su(i)] = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  const int workers = std::min(nthreads, count);
  pool.reserve(su(workers));
  for (int w = 0; w < workers; ++w) pool.emplace_back(work);
  for (auto& t : pool) t.join();
  for (auto& e : errs)
    if (e) std::rethrow_exception(e);
}

struct RunConfig {
  std::string format = "json";
  std::string out_path;
  int threads = 1;
};

struct CheckLine {
  std::string identity;
  std::string scope;
  std::size_t cases = 0;
  bool pass = true;
  json counterexample;  // null unless the check failed
};

int emit(const std::string& body, const RunConfig& cfg, std::ostream& out,
         std::ostream& err) {
  if (!cfg.out_path.empty()) {
    std::ofstream f(cfg.out_path, std::ios::binary);
    if (!f) {
      err << "error: cannot open output path " << cfg.out_path << "\n";
      return 2;
    }
    f << body;
    return 0;
  }
  out << body;
  return 0;
}

/// RFC-4180 style: quote when the field contains a comma, quote, or newline.
std::string csv_field(const std::string& v) {
  if (v.find_first_of(",\"\n") == std::string::npos) return v;
  std::string quoted = "\"";
  for (char ch : v) quoted += (ch == '"') ? std::string("\"\"") : std::string(1, ch);
  quoted += "\"";
  return quoted;
}

std::string render_checks(const json& rep, const std::string& format) {
  if (format == "json") return rep.dump(2) + "\n";
  std::string s;
  if (format == "csv") {
    s += "identity,scope,cases,pass,counterexample\n";
    for (const auto& c : rep.at("checks")) {
      s += csv_field(c.at("identity").get<std::string>()) + "," +
           csv_field(c.at("scope").get<std::string>()) + "," +
           std::to_string(c.at("cases").get<std::size_t>()) + "," +
           (c.at("pass").get<bool>() ? "true" : "false") + ",";
      if (!c.at("counterexample").is_null()) s += csv_field(c.at("counterexample").dump());
      s += "\n";
    }
    return s;
  }
  for (const auto& c : rep.at("checks")) {
    s += c.at("pass").get<bool>() ? "[ OK ] " : "[FAIL] ";
    s += c.at("identity").get<std::string>() + "  (" + c.at("scope").get<std::string>() +
         ", " + std::to_string(c.at("cases").get<std::size_t>()) + " cases)\n";
    if (!c.at("counterexample").is_null())
      s += "       counterexample: " + c.at("counterexample").dump() + "\n";
  }
  s += rep.at("pass").get<bool>() ? "PASS\n" : "FAIL\n";
  return s;
}

int finish_checks(const std::string& command, const json& config,
                  const std::vector<CheckLine>& checks, const RunConfig& cfg,
                  std::ostream& out, std::ostream& err) {
  json rep;
  rep["command"] = command;
  rep["config"] = config;
  bool pass = true;
  json jc = json::array();
  for (const CheckLine& c : checks) {
    json e;
    e["identity"] = c.identity;
    e["scope"] = c.scope;
    e["cases"] = c.cases;
    e["pass"] = c.pass;
    e["counterexample"] = c.counterexample;
    jc.push_back(std::move(e));
    pass = pass && c.pass;
  }
  rep["checks"] = std::move(jc);
  rep["pass"] = pass;
  int rc = emit(render_checks(rep, cfg.format), cfg, out, err);
  if (rc != 0) return rc;
  return pass ? 0 : 1;
}

// -------------------------------------------------------------- verify ----

int verify_derham(int n_flag, int rmax, const RunConfig& cfg, std::ostream& out,
                  std::ostream& err) {
  std::vector<int> ns;
  if (n_flag == 0)
    ns = {1, 2, 3};
  else if (n_flag >= 1 && n_flag <= 3)
    ns = {n_flag};
  else
    throw std::invalid_argument("--n must be between 1 and 3");
  std::vector<DerhamCheck> results(ns.size());
  parallel_for(cfg.threads, static_cast<int>(ns.size()),
               [&](int i) { results[su(i)] = homotopy_check_derham(ns[su(i)], rmax); });
  std::vector<CheckLine> checks;
  for (std::size_t i = 0; i < ns.size(); ++i)
    for (const DerhamCheckEntry& e : results[i].entries) {
      CheckLine c;
      c.identity = e.k == 0 ? "P·d·u = u - u(0)" : "d·P + P·d = I";
      c.scope = "n=" + std::to_string(ns[i]) + ", k=" + std::to_string(e.k);
      c.cases = e.cases;
      c.pass = e.pass;
      if (!e.pass) c.counterexample = e.counterexample;
      checks.push_back(std::move(c));
    }
  json config{{"target", "derham"}, {"n", n_flag}, {"rmax", rmax}};
  return finish_checks("verify", config, checks, cfg, out, err);
}

/// Calls fn on every single-term basis element of the given twisted degree
/// (row, index set, value index, monomial of degree <= rmax); stops early
/// when fn returns false.
void for_each_twisted_basis(const DiagramSpec& D, int degree, int rmax,
                            const std::function<bool(const TwistedElement&)>& fn) {
  const auto mons = monomial_basis(D.n, rmax, BasisMode::UpTo);
  for (int g = 0; g < D.rows(); ++g) {
    const ValueSpace& W = value_space(D.row_value[su(g)], D.n);
    for (IndexMask mask : index_sets(D.n, degree))
      for (int a = 0; a < W.dim(); ++a)
        for (const Monomial& m : mons) {
          TwistedElement u = zero_twisted(D, degree);
          u.comp[su(g)].set_coeff(mask, a, Poly::monomial(m, Rational(1)));
          if (!fn(u)) return;
        }
  }
}

int verify_twisted(const std::string& diagram, int rmax, const RunConfig& cfg,
                   std::ostream& out, std::ostream& err) {
  const DiagramSpec D = builtin_diagram(diagram);
  std::vector<CheckLine> checks(su(D.n + 1));
  parallel_for(cfg.threads, D.n + 1, [&](int i) {
    CheckLine& c = checks[su(i)];
    c.scope = "degree " + std::to_string(i);
    if (i == 0) {
      c.identity = "dV0·PV1·dV0 = dV0";
      for_each_twisted_basis(D, 0, rmax, [&](const TwistedElement& u) {
        ++c.cases;
        TwistedElement du = twisted_d(D, u);
        if (!(twisted_d(D, twisted_poincare(D, du)) == du)) {
          c.pass = false;
          c.counterexample = json{{"identity", c.identity}, {"element", twisted_to_json(u)}};
        }
        return c.pass;
      });
    } else {
      c.identity = "dV·PV + PV·dV = I";
      for_each_twisted_basis(D, i, rmax, [&](const TwistedElement& u) {
        ++c.cases;
        TwistedElement lhs = twisted_d(D, twisted_poincare(D, u)) +
                             twisted_poincare(D, twisted_d(D, u));
        if (!(lhs == u)) {
          c.pass = false;
          c.counterexample = json{{"identity", c.identity}, {"element", twisted_to_json(u)}};
        }
        return c.pass;
      });
    }
  });
  json config{{"target", "twisted"}, {"diagram", diagram}, {"rmax", rmax}};
  return finish_checks("verify", config, checks, cfg, out, err);
}

int verify_bgg(const std::string& diagram, int rmax, const RunConfig& cfg,
               std::ostream& out, std::ostream& err) {
  const DiagramSpec D = builtin_diagram(diagram);
  const BGGComplexDesc desc = bgg_complex_desc(diagram);
  const int nslots = static_cast<int>(desc.slots.size());
  std::vector<CheckLine> checks(su(nslots));
  parallel_for(cfg.threads, nslots, [&](int i) {
    CheckLine& c = checks[su(i)];
    c.scope = "slot " + std::to_string(i);
    c.identity = i == 0 ? "D0·P1·D0 = D0" : "D·P + P·D = I";
    const ValueTag tag = desc.slots[su(i)].proxy;
    const ValueSpace& W = value_space(tag, D.n);
    for (const Monomial& m : monomial_basis(D.n, rmax, BasisMode::UpTo)) {
      Poly mu = Poly::monomial(m, Rational(1));
      for (int b = 0; b < W.dim() && c.pass; ++b) {
        TwistedElement u = embed_in_bgg_slot(D, desc, i, basis_field(tag, D.n, mu, b));
        ++c.cases;
        bool ok;
        if (i == 0) {
          TwistedElement du = bgg_d(D, u);
          ok = (bgg_d(D, bgg_poincare(D, du)) == du);
        } else {
          TwistedElement lhs =
              bgg_d(D, bgg_poincare(D, u)) + bgg_poincare(D, bgg_d(D, u));
          ok = (lhs == u);
        }
        if (!ok) {
          c.pass = false;
          c.counterexample = json{{"identity", c.identity}, {"element", twisted_to_json(u)}};
        }
      }
      if (!c.pass) break;
    }
  });
  json config{{"target", "bgg"}, {"diagram", diagram}, {"rmax", rmax}};
  return finish_checks("verify", config, checks, cfg, out, err);
}

int verify_abstract(std::uint64_t seed, int count, const RunConfig& cfg,
                    std::ostream& out, std::ostream& err) {
  if (count < 1) throw std::invalid_argument("instance count must be >= 1");
  std::vector<AbstractInstanceReport> results(su(count));
  parallel_for(cfg.threads, count, [&](int i) {
    results[su(i)] = run_abstract_instance(seed + static_cast<std::uint64_t>(i));
  });
  CheckLine c;
  c.identity =
      "d·P + P·d = I - L, d·L = L·d, L·L = L, H(sub) = H, "
      "H(twisted) = row sum, exp(K) and BGG-step identities";
  c.scope = "seeds " + std::to_string(seed) + ".." +
            std::to_string(seed + static_cast<std::uint64_t>(count) - 1);
  c.cases = su(count);
  for (int i = 0; i < count && c.pass; ++i)
    if (!results[su(i)].pass) {
      c.pass = false;
      c.counterexample = json{{"seed", seed + static_cast<std::uint64_t>(i)},
                              {"detail", results[su(i)].detail}};
    }
  json config{{"target", "abstract"}, {"seed", seed}, {"instances", count}};
  return finish_checks("verify", config, {c}, cfg, out, err);
}

std::string seq_text_line(const SequenceReport& rep) {
  std::ostringstream os;
  os << rep.name << " r=" << rep.r << ": dims [";
  for (std::size_t i = 0; i < rep.slots.size(); ++i)
    os << (i ? "," : "") << rep.slots[i].dim;
  os << "] cohomology [";
  for (std::size_t i = 0; i < rep.slots.size(); ++i) {
    os << (i ? "," : "");
    if (rep.slots[i].cohomology >= 0)
      os << rep.slots[i].cohomology;
    else
      os << "?";
  }
  os << "] chi " << rep.chi << (rep.pass ? " PASS" : " FAIL");
  if (!rep.note.empty()) os << "  note: " << rep.note;
  if (!rep.counterexample.empty()) os << "  counterexample: " << rep.counterexample;
  os << "\n";
  return os.str();
}

std::string homog_text_line(const HomogReport& rep) {
  std::ostringstream os;
  os << "homog-elast r=" << rep.r << ": degrees [";
  for (std::size_t i = 0; i < rep.degrees.size(); ++i)
    os << (i ? "," : "") << rep.degrees[i];
  os << "] dims [";
  for (std::size_t i = 0; i < rep.dims.size(); ++i) os << (i ? "," : "") << rep.dims[i];
  os << "] P-in-slot [";
  for (std::size_t i = 0; i < rep.poincare_in_slot.size(); ++i)
    os << (i ? "," : "") << (rep.poincare_in_slot[i] ? "yes" : "no");
  os << "]" << (rep.pass ? " PASS" : " FAIL") << "\n";
  return os.str();
}

std::string homog_csv(const std::vector<HomogReport>& reps) {
  std::string s = "name,r,slot,degree,dim,poincare_in_slot\n";
  for (const HomogReport& rep : reps)
    for (std::size_t i = 0; i < rep.dims.size(); ++i) {
      s += "homog-elast," + std::to_string(rep.r) + "," + std::to_string(i) + "," +
           std::to_string(rep.degrees[i]) + "," + std::to_string(rep.dims[i]) + ",";
      if (i >= 1) s += rep.poincare_in_slot[i - 1] ? "true" : "false";
      s += "\n";
    }
  return s;
}

int verify_polyseq(const std::string& name, int r0, int r1, const RunConfig& cfg,
                   std::ostream& out, std::ostream& err) {
  if (r0 < 0 || r1 < r0) throw std::invalid_argument("need 0 <= r <= rmax");
  const int count = r1 - r0 + 1;

  if (name == "homog-elast") {
    std::vector<HomogReport> reps(su(count));
    parallel_for(cfg.threads, count,
                 [&](int i) { reps[su(i)] = verify_homogeneous_grading(r0 + i); });
    bool pass = true;
    for (const HomogReport& rep : reps) pass = pass && rep.pass;
    std::string body;
    if (cfg.format == "json") {
      json arr = json::array();
      for (const HomogReport& rep : reps) arr.push_back(homog_to_json(rep));
      json doc{{"command", "verify"},
               {"config", json{{"target", "polyseq"}, {"name", name}, {"r", r0}, {"rmax", r1}}},
               {"reports", arr},
               {"pass", pass}};
      body = doc.dump(2) + "\n";
    } else if (cfg.format == "csv") {
      body = homog_csv(reps);
    } else {
      for (const HomogReport& rep : reps) body += homog_text_line(rep);
      body += pass ? "PASS\n" : "FAIL\n";
    }
    int rc = emit(body, cfg, out, err);
    return rc != 0 ? rc : (pass ? 0 : 1);
  }

  const bool enriched = !name.empty() && name.back() == '+';
  const std::string base = enriched ? name.substr(0, name.size() - 1) : name;
  (void)polyseq_spec(base);  // validates the name (throws on unknown)
  std::vector<SequenceReport> reps(su(count));
  parallel_for(cfg.threads, count, [&](int i) {
    reps[su(i)] =
        enriched ? verify_enriched_complex(base, r0 + i) : verify_polynomial_complex(base, r0 + i);
  });
  bool pass = true;
  for (const SequenceReport& rep : reps) pass = pass && rep.pass;
  std::string body;
  if (cfg.format == "json") {
    json arr = json::array();
    for (const SequenceReport& rep : reps) arr.push_back(report_to_json(rep));
    json doc{{"command", "verify"},
             {"config", json{{"target", "polyseq"}, {"name", name}, {"r", r0}, {"rmax", r1}}},
             {"reports", arr},
             {"pass", pass}};
    body = doc.dump(2) + "\n";
  } else if (cfg.format == "csv") {
    body = report_csv_header();
    for (const SequenceReport& rep : reps) report_to_csv(rep, body);
  } else {
    for (const SequenceReport& rep : reps) body += seq_text_line(rep);
    body += pass ? "PASS\n" : "FAIL\n";
  }
  int rc = emit(body, cfg, out, err);
  return rc != 0 ? rc : (pass ? 0 : 1);
}

// --------------------------------------------------------------- apply ----

json poly_to_json(const Poly& p) {
  json terms = json::array();
  for (const auto& [m, c] : p.terms())
    terms.push_back(json{{"monomial", m.exp}, {"coeff", rational_to_string(c)}});
  return terms;
}

Poly poly_from_json(const json& j, int n) {
  if (!j.is_array()) throw std::invalid_argument("polynomial JSON must be an array");
  Poly p(n);
  for (const auto& t : j) {
    const auto expv = t.at("monomial").get<std::vector<std::uint32_t>>();
    if (static_cast<int>(expv.size()) != n)
      throw std::invalid_argument("polynomial JSON: monomial length must equal n");
    p += Poly::monomial(Monomial(expv), rational_from_string(t.at("coeff").get<std::string>()));
  }
  return p;
}

json proxy_to_json(const ProxyField& f) {
  json j;
  switch (f.kind) {
    case AmbientKind::Scalar:
      j["kind"] = "scalar";
      break;
    case AmbientKind::Vector:
      j["kind"] = "vector";
      break;
    case AmbientKind::Matrix:
      j["kind"] = "matrix";
      break;
  }
  j["n"] = f.n;
  json comp = json::array();
  for (const Poly& p : f.comp) comp.push_back(poly_to_json(p));
  j["comp"] = std::move(comp);
  return j;
}

ProxyField proxy_from_json(const json& j) {
  if (!j.is_object()) throw std::invalid_argument("field JSON must be an object");
  const std::string kind = j.at("kind").get<std::string>();
  const int n = j.at("n").get<int>();
  if (n < 1 || n > 3) throw std::invalid_argument("field JSON: need 1 <= n <= 3");
  const auto& jc = j.at("comp");
  std::vector<Poly> comp;
  for (const auto& c : jc) comp.push_back(poly_from_json(c, n));
  if (kind == "scalar") {
    if (comp.size() != 1) throw std::invalid_argument("scalar field needs 1 component");
    return ProxyField::scalar(comp[0]);
  }
  if (kind == "vector") {
    if (comp.size() != su(n)) throw std::invalid_argument("vector field needs n components");
    return ProxyField::vector(n, std::move(comp));
  }
  if (kind == "matrix") {
    if (comp.size() != su(n * n))
      throw std::invalid_argument("matrix field needs n*n components");
    return ProxyField::matrix(n, std::move(comp));
  }
  throw std::invalid_argument("field JSON: kind must be scalar|vector|matrix");
}

bool is_proxy_op(const std::string& op) {
  static const std::vector<std::string> names = {
      "grad",    "curl",   "div",     "def",  "hess", "inc",  "divdiv",
      "symcurl", "devgrad", "devhess", "devdef", "sym",  "skw",  "dev",
      "tr",      "iota",   "mskw",    "vskw", "transpose"};
  return std::find(names.begin(), names.end(), op) != names.end();
}

/// "P1-elasticity" etc: BGG Poincare operator from slot i to slot i-1,
/// reading and writing proxy fields.
bool parse_slot_poincare(const std::string& op, int& slot, std::string& diagram) {
  if (op.size() < 4 || op[0] != 'P' || op[2] != '-') return false;
  if (op[1] < '1' || op[1] > '3') return false;
  slot = op[1] - '0';
  diagram = op.substr(3);
  return true;
}

int cmd_apply(const std::string& op, const std::string& input_path,
              const std::string& diagram, const RunConfig& cfg, std::ostream& out,
              std::ostream& err) {
  json in;
  if (input_path == "-") {
    std::cin >> in;
  } else {
    std::ifstream f(input_path);
    if (!f) throw std::invalid_argument("cannot open input file " + input_path);
    f >> in;
  }

  json result;
  int slot = 0;
  std::string slot_diagram;
  if (op == "d" || op == "koszul" || op == "iE") {
    PolyForm u = polyform_from_json(in);
    PolyForm v = op == "d"        ? exterior_d(u)
                 : op == "koszul" ? koszul_poincare(u)
                                  : interior_euler(u);
    result = polyform_to_json(v);
  } else if (is_proxy_op(op)) {
    result = proxy_to_json(apply_proxy_operator(op, proxy_from_json(in)));
  } else if (op == "twisted-d" || op == "twisted-poincare" || op == "proj-upsilon" ||
             op == "bgg-d" || op == "bgg-poincare") {
    if (diagram.empty())
      throw std::invalid_argument("operator " + op + " requires --diagram");
    const DiagramSpec D = builtin_diagram(diagram);
    TwistedElement u = twisted_from_json(D, in);
    TwistedElement v = op == "twisted-d"          ? twisted_d(D, u)
                       : op == "twisted-poincare" ? twisted_poincare(D, u)
                       : op == "proj-upsilon"     ? proj_upsilon(D, u)
                       : op == "bgg-d"            ? bgg_d(D, u)
                                                  : bgg_poincare(D, u);
    result = twisted_to_json(v);
  } else if (parse_slot_poincare(op, slot, slot_diagram)) {
    const DiagramSpec D = builtin_diagram(slot_diagram);
    const BGGComplexDesc desc = bgg_complex_desc(slot_diagram);
    TwistedElement u = embed_in_bgg_slot(D, desc, slot, proxy_from_json(in));
    ProxyField v = extract_from_bgg_slot(D, desc, slot - 1, bgg_poincare(D, u));
    result = proxy_to_json(v);
  } else {
    throw std::invalid_argument("unknown operator '" + op + "'");
  }
  return emit(result.dump(2) + "\n", cfg, out, err);
}

// ---------------------------------------------------------------- dims ----

int cmd_dims(const std::string& name, int r0, int r1, const RunConfig& cfg,
             std::ostream& out, std::ostream& err) {
  if (r0 < 0 || r1 < r0) throw std::invalid_argument("need 0 <= r <= rmax");
  const int count = r1 - r0 + 1;

  if (name == "homog-elast") {
    // Dimension table only, no verdicts.
    std::vector<HomogReport> reps(su(count));
    for (int i = 0; i < count; ++i) {
      reps[su(i)].r = r0 + i;
      reps[su(i)].degrees = homog_slot_degrees(r0 + i);
      reps[su(i)].dims = homog_slot_dims(r0 + i);
      reps[su(i)].pass = true;
    }
    std::string body;
    if (cfg.format == "json") {
      json arr = json::array();
      for (const HomogReport& rep : reps)
        arr.push_back(json{{"name", "homog-elast"},
                           {"r", rep.r},
                           {"degrees", rep.degrees},
                           {"dims", rep.dims}});
      body = arr.dump(2) + "\n";
    } else if (cfg.format == "csv") {
      body = "name,r,slot,degree,dim\n";
      for (const HomogReport& rep : reps)
        for (std::size_t i = 0; i < rep.dims.size(); ++i)
          body += "homog-elast," + std::to_string(rep.r) + "," + std::to_string(i) + "," +
                  std::to_string(rep.degrees[i]) + "," + std::to_string(rep.dims[i]) + "\n";
    } else {
      for (const HomogReport& rep : reps) {
        std::ostringstream os;
        os << "homog-elast r=" << rep.r << ": degrees [";
        for (std::size_t i = 0; i < rep.degrees.size(); ++i)
          os << (i ? "," : "") << rep.degrees[i];
        os << "] dims [";
        for (std::size_t i = 0; i < rep.dims.size(); ++i)
          os << (i ? "," : "") << rep.dims[i];
        os << "]\n";
        body += os.str();
      }
    }
    return emit(body, cfg, out, err);
  }

  (void)polyseq_spec(name);  // validates the name
  std::vector<SequenceReport> reps(su(count));
  parallel_for(cfg.threads, count,
               [&](int i) { reps[su(i)] = verify_polynomial_complex(name, r0 + i); });
  bool pass = true;
  for (const SequenceReport& rep : reps) pass = pass && rep.pass;
  std::string body;
  if (cfg.format == "json") {
    json arr = json::array();
    for (const SequenceReport& rep : reps) arr.push_back(report_to_json(rep));
    body = arr.dump(2) + "\n";
  } else if (cfg.format == "csv") {
    body = report_csv_header();
    for (const SequenceReport& rep : reps) report_to_csv(rep, body);
  } else {
    for (const SequenceReport& rep : reps) body += seq_text_line(rep);
  }
  int rc = emit(body, cfg, out, err);
  return rc != 0 ? rc : (pass ? 0 : 1);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact homotopy operators and identity verification for "
               "polynomial de Rham, twisted, and BGG complexes"};
  app.name("bggv");

  std::string target, diagram, name, op, input = "-";
  std::string format = "json", out_path;
  int n = 0, r = -1, rmax = -1;
  std::uint64_t seed = 0;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--diagram", diagram, "grid name: hessian, elasticity, divdiv");
    cmd->add_option("--name", name, "sequence name (see `dims`)");
    cmd->add_option("--n", n, "space dimension (derham target; 0 = all of 1..3)");
    cmd->add_option("--r", r, "single degree / start of range");
    cmd->add_option("--rmax", rmax,
                    "degree bound; abstract target: number of seeded instances");
    cmd->add_option("--seed", seed, "base seed for randomized suites");
    cmd->add_option("--format", format, "report format")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    cmd->add_option("--out", out_path, "write the report to this path");
  };

  CLI::App* vf = app.add_subcommand("verify", "run an identity suite");
  vf->add_option("target", target, "derham | twisted | bgg | abstract | polyseq")
      ->required();
  add_common(vf);

  CLI::App* ap = app.add_subcommand("apply", "apply an operator to a JSON element");
  ap->add_option("operator", op, "operator name (d, koszul, iE, proxy ops, twisted-*, bgg-*, P<i>-<grid>)")
      ->required();
  ap->add_option("input", input, "input JSON path ('-' = stdin)");
  add_common(ap);

  CLI::App* dm = app.add_subcommand("dims", "emit dimension/rank/cohomology tables");
  add_common(dm);

  app.require_subcommand(1);

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  RunConfig cfg;
  cfg.format = format;
  cfg.out_path = out_path;
  cfg.threads = env_threads();

  try {
    if (vf->parsed()) {
      if (target == "derham") return verify_derham(n, rmax < 0 ? 5 : rmax, cfg, out, err);
      if (target == "twisted") {
        if (diagram.empty()) throw std::invalid_argument("verify twisted requires --diagram");
        return verify_twisted(diagram, rmax < 0 ? 4 : rmax, cfg, out, err);
      }
      if (target == "bgg") {
        if (diagram.empty()) throw std::invalid_argument("verify bgg requires --diagram");
        return verify_bgg(diagram, rmax < 0 ? 4 : rmax, cfg, out, err);
      }
      if (target == "abstract")
        return verify_abstract(seed, rmax < 0 ? 25 : rmax, cfg, out, err);
      if (target == "polyseq") {
        if (name.empty()) throw std::invalid_argument("verify polyseq requires --name");
        int r0 = r < 0 ? (name == "homog-elast" ? 0 : 4) : r;
        int r1 = rmax < 0 ? (name == "homog-elast" && r < 0 ? 5 : r0) : rmax;
        return verify_polyseq(name, r0, r1, cfg, out, err);
      }
      throw std::invalid_argument("unknown verify target '" + target + "'");
    }
    if (ap->parsed()) return cmd_apply(op, input, diagram, cfg, out, err);
    if (dm->parsed()) {
      if (name.empty()) throw std::invalid_argument("dims requires --name");
      int r0 = r < 0 ? (name == "homog-elast" ? 0 : 4) : r;
      int r1 = rmax < 0 ? r0 : rmax;
      return cmd_dims(name, r0, r1, cfg, out, err);
    }
    throw std::invalid_argument("no subcommand given");
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::logic_error& e) {
    err << "identity failure: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace bgg
