#include <algorithm>
#include <cmath>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "a3d/checks.hpp"
#include "a3d/engine.hpp"
#include "a3d/evalfield.hpp"
#include "a3d/oracle.hpp"
#include "a3d/parse.hpp"
#include "a3d/report.hpp"

namespace {

using namespace a3d;
using nlohmann::json;

constexpr int kOk = 0, kInternal = 1, kUsage = 2, kPrecondition = 3, kCap = 4;

struct Config {
  long long characteristic = 3;
  int d = 1;
  std::string mdeg;
  int maxdeg = 0;
  int cap = 0;
  std::uint64_t seed = 1;
  std::size_t samples = 0;
  int threads = 0;
  std::string format = "tsv";
  std::string cache_dir;
  bool force = false;
  std::string expr;
  int t = -1;
  int r = -1;
  bool decide = false;
  std::string suite;
};

bool json_out(const Config& c) { return c.format == "json"; }

template <class Fn>
int with_coeff_field(const Config& c, Fn&& fn) {
  CoeffField cf = parse_characteristic(c.characteristic);
  if (cf.is_rational()) return fn(RationalField{});
  return fn(PrimeField(static_cast<std::uint32_t>(cf.characteristic)));
}

EngineOptions engine_options(const Config& c) {
  EngineOptions o;
  o.threads = c.threads;
  o.cache_dir = c.cache_dir;
  return o;
}

OracleOptions oracle_options(const Config& c) {
  OracleOptions o;
  o.seed = c.seed;
  o.samples = c.samples;
  o.threads = c.threads;
  return o;
}

std::size_t require_d(const Config& c) {
  if (c.d < 1) throw PreconditionError("--d must be at least 1");
  return static_cast<std::size_t>(c.d);
}

Multidegree parse_mdeg(const std::string& text, std::size_t d) {
  std::vector<int> v;
  std::stringstream ss(text);
  std::string item;
  std::size_t pos = 0;
  while (std::getline(ss, item, ',')) {
    if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos)
      throw ParseError("bad multidegree entry '" + item + "'", pos);
    if (item.size() > 4) throw ParseError("multidegree entry too large", pos);
    v.push_back(std::stoi(item));
    pos += item.size() + 1;
  }
  if (v.empty()) throw ParseError("empty multidegree", 0);
  if (v.size() > d) throw PreconditionError("multidegree " + text + " has more than d = " + std::to_string(d) + " entries");
  Multidegree m(v);
  if (m.is_zero()) throw PreconditionError("multidegree must be nonzero");
  return m.resized(d);
}

void randomized_header(const Config& c, const std::string& field, std::size_t samples, double error_bound) {
  std::cout << "# seed: " << c.seed << "\n# field: " << field << "\n# samples: " << samples
            << "\n# error_bound: " << error_bound << "\n";
}

// dims

int cmd_dims(const Config& c) {
  const std::size_t d = require_d(c);
  std::vector<Multidegree> deltas;
  if (!c.mdeg.empty()) {
    deltas.push_back(parse_mdeg(c.mdeg, d));
  } else if (c.maxdeg > 0) {
    for (int k = 1; k <= c.maxdeg; ++k)
      for (const auto& m : compositions(k, d)) deltas.push_back(m);
  } else {
    throw PreconditionError("dims needs --mdeg or --maxdeg");
  }
  return with_coeff_field(c, [&](auto field) {
    A3dEngine<decltype(field)> engine(field, d, engine_options(c));
    json rows = json::array();
    if (!json_out(c)) std::cout << "multidegree\tambient\trank\tquotient\n";
    for (const auto& m : deltas) {
      ComponentReport r = engine.report(m);
      if (json_out(c))
        rows.push_back({{"multidegree", m.entries()}, {"ambient", r.ambient}, {"rank", r.rank}, {"quotient", r.quotient}});
      else
        std::cout << m.to_string() << "\t" << r.ambient << "\t" << r.rank << "\t" << r.quotient << std::endl;
    }
    if (json_out(c)) std::cout << json{{"query", "dims"}, {"field", field.name()}, {"d", d}, {"components", rows}}.dump(2) << "\n";
    return kOk;
  });
}

// iszero

int cmd_iszero(const Config& c) {
  if (c.expr.empty()) throw PreconditionError("iszero needs --expr");
  const std::size_t d = require_d(c);
  const NCPoly<RationalField> parsed = parse_ncpoly(c.expr);
  return with_coeff_field(c, [&](auto field) {
    A3dEngine<decltype(field)> engine(field, d, engine_options(c));
    auto f = to_field(parsed, field);
    auto nf = engine.normal_form(f);
    const bool zero = nf.is_zero();
    if (json_out(c))
      std::cout << json{{"query", "iszero"}, {"expr", c.expr}, {"field", field.name()}, {"d", d}, {"zero", zero},
                        {"normal_form", format_poly(nf)}}
                       .dump(2)
                << "\n";
    else
      std::cout << (zero ? "zero" : "nonzero") << "\n";
    return kOk;
  });
}

// nildeg

int cmd_nildeg(const Config& c) {
  const std::size_t d = require_d(c);
  const int cap = c.cap > 0 ? c.cap : 12;
  return with_coeff_field(c, [&](auto field) {
    A3dEngine<decltype(field)> engine(field, d, engine_options(c));
    NilpotencyResult r = engine.nilpotency_degree(cap);
    if (json_out(c))
      std::cout << json{{"query", "nildeg"}, {"field", field.name()}, {"d", d}, {"cap", cap}, {"nilpotency_degree", r.degree},
                        {"graded_dims", r.graded_dims}}
                       .dump(2)
                << "\n";
    else
      std::cout << r.degree << "\n";
    return kOk;
  });
}

// dmax

int cmd_dmax(const Config& c) {
  const std::size_t d = require_d(c);
  const int cap = c.cap > 0 ? c.cap : 10;
  const CoeffField cf = parse_characteristic(c.characteristic);
  return with_eval_field(cf.characteristic, [&](auto field) {
    O3Oracle<decltype(field)> oracle(field, d, oracle_options(c));
    DmaxResult r = oracle.dmax_scan(cap);
    if (json_out(c)) {
      std::cout << json{{"query", "dmax"}, {"delta", nullptr}, {"field", field.name()}, {"d", d}, {"cap", cap},
                        {"seed", c.seed}, {"samples", r.samples}, {"verdict", r.dmax}, {"error_bound", r.error_bound},
                        {"new_generators", r.new_generators}}
                       .dump(2)
                << "\n";
      return kOk;
    }
    randomized_header(c, field.name(), r.samples, r.error_bound);
    std::cout << "# new generators per degree:";
    for (std::size_t k = 0; k < r.new_generators.size(); ++k) std::cout << (k ? "," : " ") << r.new_generators[k];
    std::cout << "\n" << r.dmax << "\n";
    return kOk;
  });
}

// sigma

template <class K>
json sigma_terms(const SigmaPoly<K>& s) {
  json terms = json::array();
  for (const auto& [m, x] : s.terms())
    terms.push_back({{"coefficient", format_rational(s.field().to_rational(x))}, {"monomial", format_monomial(m)}});
  return terms;
}

int decide_sigma(const Config& c, const std::string& query, const SigmaPoly<RationalField>& s, std::size_t d) {
  const auto comps = s.components(d);
  if (comps.size() != 1) throw PreconditionError("expression is not multihomogeneous");
  const Multidegree delta = comps.begin()->first;
  if (delta.is_zero()) throw PreconditionError("expression is a constant");
  const CoeffField cf = parse_characteristic(c.characteristic);
  return with_eval_field(cf.characteristic, [&](auto field) {
    O3Oracle<decltype(field)> oracle(field, d, oracle_options(c));
    Verdict v = oracle.decomposable(s, delta, true);
    if (json_out(c)) {
      json j = verdict_json(query, delta, field.name(), v, c.seed);
      j["terms"] = sigma_terms(s);
      std::cout << j.dump(2) << "\n";
      return kOk;
    }
    randomized_header(c, field.name(), v.samples, v.error_bound);
    std::cout << "# multidegree: " << delta.to_string() << "\n# candidates: " << v.candidates << "\n";
    std::cout << (v.decomposable ? "decomposable" : "indecomposable") << "\n";
    return kOk;
  });
}

int cmd_sigma(const Config& c) {
  SigmaPoly<RationalField> s;
  std::string query;
  std::size_t d = require_d(c);
  if (!c.expr.empty()) {
    if (c.t >= 0 || c.r >= 0) throw PreconditionError("sigma takes either --expr or --t/--r");
    s = parse_sigma(c.expr);
    query = c.expr;
    if (static_cast<std::size_t>(s.max_index()) > d)
      throw PreconditionError("expression uses x" + std::to_string(s.max_index()) + " but d = " + std::to_string(d));
  } else {
    if (c.t < 0 || c.r < 0) throw PreconditionError("sigma needs --expr or both --t and --r");
    s = build_sigma_tr(RationalField{}, c.t, c.r);
    query = "sigma_{" + std::to_string(c.t) + "," + std::to_string(c.r) + "}(x1,x2,x3)";
    d = std::max<std::size_t>(d, 3);
  }
  if (c.decide) return decide_sigma(c, query, s, d);
  if (json_out(c))
    std::cout << json{{"query", query}, {"terms", sigma_terms(s)}}.dump(2) << "\n";
  else
    std::cout << format_sigma(s) << "\n";
  return kOk;
}

// witness

int cmd_witness(const Config& c) {
  const int d = static_cast<int>(require_d(c));
  return with_coeff_field(c, [&](auto field) {
    A3dEngine<decltype(field)> engine(field, static_cast<std::size_t>(d), engine_options(c));
    auto a = witness_ad(field, d);
    const Multidegree m = multidegree(a.terms().begin()->first, static_cast<std::size_t>(d));
    const bool zero = engine.is_zero(a);
    if (json_out(c))
      std::cout << json{{"query", "witness"}, {"field", field.name()}, {"d", d}, {"multidegree", m.entries()},
                        {"terms", a.size()}, {"zero", zero}}
                       .dump(2)
                << "\n";
    else
      std::cout << "# multidegree: " << m.to_string() << "\n# terms: " << a.size() << "\n" << (zero ? "zero" : "nonzero") << "\n";
    if (c.decide) return decide_sigma(c, "tr(witness)", tr(to_rational(a)), static_cast<std::size_t>(d));
    return kOk;
  });
}

// check

int cmd_check(const Config& c) {
  std::vector<std::string> suites;
  if (c.suite == "all")
    suites = default_check_suites();
  else
    suites.push_back(c.suite);
  const auto known = all_check_suites();
  for (const auto& s : suites)
    if (std::find(known.begin(), known.end(), s) == known.end()) throw PreconditionError("unknown check suite '" + s + "'");
  CheckOptions opts;
  opts.seed = c.seed;
  opts.threads = c.threads;
  bool ok = true;
  json rows = json::array();
  if (!json_out(c)) std::cout << "suite\tproperty\tcases\tseconds\tresult\tdetail\n";
  for (const auto& suite : suites) {
    for (const auto& r : run_check_suite(suite, opts)) {
      ok = ok && r.passed;
      if (json_out(c)) {
        rows.push_back({{"suite", r.suite}, {"property", r.name}, {"cases", r.cases}, {"seconds", r.seconds},
                        {"passed", r.passed}, {"detail", r.detail}});
      } else {
        std::cout << r.suite << "\t" << r.name << "\t" << r.cases << "\t" << std::fixed << std::setprecision(2) << r.seconds
                  << "\t" << (r.passed ? "PASS" : "FAIL") << "\t" << r.detail << std::endl;
      }
    }
  }
  if (json_out(c)) std::cout << json{{"query", "check"}, {"suite", c.suite}, {"passed", ok}, {"results", rows}}.dump(2) << "\n";
  return ok ? kOk : kInternal;
}

// hypothesis

int cmd_hypothesis(const Config& c) {
  if (c.characteristic != 3) throw PreconditionError("hypothesis is stated for characteristic 3");
  constexpr int d = 7;
  PrimeField F3(3);
  auto x = [&](int i) { return letter_poly(F3, i); };
  auto W = [&](int i, int j) { return x(i).pow(2) * x(j).pow(2) * x(i) * x(j); };
  const auto target = x(1).pow(2) * W(2, 3) * x(1) * W(4, 5) * W(6, 7);
  const Multidegree m = multidegree(target.terms().begin()->first, d);
  // Words at m: n! / prod(m_k!) * 2^n; the elimination touches every component below m.
  const int n = m.total();
  long double log_words = std::lgamma(n + 1.0L) + n * std::log(2.0L);
  for (std::size_t k = 0; k < m.size(); ++k) log_words -= std::lgamma(m[k] + 1.0L);
  const long double words = std::exp(log_words);
  const long double bytes = words * (n + 48);
  std::cout << "# target: x1^2 W23 x1 W45 W67, Wij = xi^2 xj^2 xi xj, over F_3 with d = 7\n"
            << "# multidegree: " << m.to_string() << " (degree " << n << ")\n"
            << std::scientific << std::setprecision(2) << "# words in the top component: " << static_cast<double>(words)
            << "\n# memory for the top component alone: >= " << static_cast<double>(bytes) << " bytes\n";
  if (!c.force) {
    std::cout << "refusing to run without --force\n";
    return kPrecondition;
  }
  A3dEngine<PrimeField> engine(F3, d, engine_options(c));
  std::cout << (engine.is_zero(target) ? "zero" : "nonzero") << "\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  Config c;
  CLI::App app{"Computations in A_{3,d} and with O(3)-invariants of 3x3 matrices"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--char", c.characteristic, "Characteristic: 0 or an odd prime")->capture_default_str();
  app.add_option("--d", c.d, "Number of generic matrices")->capture_default_str();
  app.add_option("--mdeg", c.mdeg, "Multidegree, e.g. 3,1");
  app.add_option("--maxdeg", c.maxdeg, "Largest total degree");
  app.add_option("--cap", c.cap, "Degree cap for nildeg and dmax");
  app.add_option("--seed", c.seed, "Random seed")->capture_default_str();
  app.add_option("--samples", c.samples, "Sample points (0 = automatic)");
  app.add_option("--threads", c.threads, "OpenMP threads (0 = default)");
  app.add_option("--format", c.format, "Output format")->check(CLI::IsMember({"tsv", "json"}))->capture_default_str();
  app.add_option("--cache-dir", c.cache_dir, "Directory for cached components");
  app.add_flag("--force", c.force, "Run experiments that exceed desk scale");
  app.add_option("--expr", c.expr, "Expression");
  app.add_option("--t", c.t, "t of sigma_{t,r}");
  app.add_option("--r", c.r, "r of sigma_{t,r}");
  app.add_flag("--decide", c.decide, "Also decide decomposability with the randomized oracle");

  std::function<int(const Config&)> run;
  auto sub = [&](const char* name, const char* help, int (*fn)(const Config&)) {
    auto* s = app.add_subcommand(name, help);
    s->callback([&run, fn] { run = fn; });
    return s;
  };
  sub("dims", "Ambient, ideal and quotient dimensions of components", cmd_dims);
  sub("iszero", "Decide whether --expr vanishes in A_{3,d}", cmd_iszero);
  sub("nildeg", "Nilpotency degree of A_{3,d}", cmd_nildeg);
  sub("dmax", "Top degree of indecomposable invariants", cmd_dmax);
  sub("sigma", "Expand sigma_{t,r} or a sigma expression", cmd_sigma);
  sub("witness", "The witness word a_d and whether it vanishes", cmd_witness);
  sub("check", "Run a property suite", cmd_check)
      ->add_option("suite", c.suite, "word-core | exact-linalg | a3d-engine | sigma-calculus | akey | all")
      ->required();
  sub("hypothesis", "The d = 7 nonvanishing experiment (refuses without --force)", cmd_hypothesis);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }
  try {
#ifdef _OPENMP
    if (c.threads > 0) omp_set_num_threads(c.threads);
#endif
    return run(c);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const PreconditionError& e) {
    std::cerr << "precondition: " << e.what() << "\n";
    return kPrecondition;
  } catch (const CapExceededError& e) {
    std::cerr << "cap exceeded: " << e.what() << "\n";
    return kCap;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternal;
  }
}
