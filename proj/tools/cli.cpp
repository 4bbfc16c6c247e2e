// resurgence-cli: coefficient tables, resummations, Stokes data, real-majors,
// alien-operator germs, Borel-plane grids and the verification suites.
//
// Exit codes: 0 ok, 1 verification failure, 2 usage, 3 numerical failure.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <numbers>
#include <sstream>

#include <CLI11.hpp>

#include "resurgence/acceptance.hpp"
#include "resurgence/alien.hpp"
#include "resurgence/reference.hpp"
#include "resurgence/stokes.hpp"

namespace {

using namespace resurgence;
using std::numbers::pi;

enum Exit { ok = 0, verification_failure = 1, usage = 2, numerical = 3 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  double tol = 1e-12;
  int order = 12;
  std::string format = "json";
  std::string out;
};

QuadratureSpec spec_from(const Options& o) {
  QuadratureSpec s;
  s.rel_tol = o.tol;
  return s;
}

void emit(const Options& o, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream f(o.out);
  if (!f) throw UsageError("cannot open output file " + o.out);
  f << text;
  if (!text.empty() && text.back() != '\n') f << '\n';
}

std::string csv_cell(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "";
  return v.dump();
}

// Scalars become columns; [re, im] pairs become NAME_re, NAME_im.
void flatten(const Json& j, const std::string& prefix, std::vector<std::string>& keys, std::vector<std::string>& vals) {
  for (auto it = j.begin(); it != j.end(); ++it) {
    const std::string key = prefix.empty() ? it.key() : prefix + "." + it.key();
    const Json& v = it.value();
    if (v.is_object()) {
      flatten(v, key, keys, vals);
    } else if (v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number()) {
      keys.push_back(key + "_re");
      vals.push_back(csv_cell(v[0]));
      keys.push_back(key + "_im");
      vals.push_back(csv_cell(v[1]));
    } else if (!v.is_array()) {
      keys.push_back(key);
      vals.push_back(csv_cell(v));
    }
  }
}

std::string record_csv(const Json& j) {
  std::vector<std::string> keys, vals;
  flatten(j, "", keys, vals);
  std::ostringstream os;
  for (std::size_t i = 0; i < keys.size(); ++i) os << (i ? "," : "") << keys[i];
  os << '\n';
  for (std::size_t i = 0; i < vals.size(); ++i) os << (i ? "," : "") << vals[i];
  os << '\n';
  return os.str();
}

void emit_record(const Options& o, const Json& j) { emit(o, o.format == "csv" ? record_csv(j) : j.dump(2)); }

ParsedComplex complex_arg(const std::string& s, const char* name) {
  try {
    return parse_complex(s);
  } catch (const DomainError& e) {
    throw UsageError(std::string("--") + name + ": " + e.what());
  }
}

// ---- coeffs ----

int cmd_coeffs(const Options& o, int kmax) {
  if (kmax < 1) throw UsageError("--kmax must be at least 1");
  if (o.order < 0) throw UsageError("--order must be non-negative");
  const std::vector<Rational> a = a_coefficients(kmax);
  const RationalSeries lt = lambda_tilde(o.order);
  const RationalSeries st = stirling_series(o.order);
  const RationalSeries ex = series_exp(st);
  int mismatches = ex.shift != lt.shift;
  for (int n = 0; n <= o.order; ++n) mismatches += ex.coefficient(n) != lt.coefficient(n);

  if (o.format == "csv") {
    std::ostringstream os;
    os << "series,index,num,den\n";
    const auto row = [&](const char* name, int k, const Rational& q) {
      os << name << ',' << k << ',' << numerator(q).str() << ',' << denominator(q).str() << '\n';
    };
    for (int k = 1; k <= kmax; ++k) row("a", k, a[static_cast<std::size_t>(k - 1)]);
    for (int n = 0; n <= o.order; ++n) row("lambda_tilde", n, lt.coefficient(n));
    for (int n = 0; n <= o.order; ++n) row("stirling", n, st.coefficient(n));
    emit(o, os.str());
  } else {
    Json as = Json::array();
    for (const Rational& q : a) as.push_back(rational_string(q));
    emit(o, Json{{"kmax", kmax},
                 {"order", o.order},
                 {"a", as},
                 {"lambda_tilde", series_to_json(lt)},
                 {"stirling", series_to_json(st)},
                 {"exp_check", {{"order", o.order}, {"mismatches", mismatches}, {"passed", mismatches == 0}}}}
                .dump(2));
  }
  return mismatches == 0 ? ok : verification_failure;
}

// ---- resum ----

int cmd_resum(const Options& o, const std::string& object, const std::string& z_text, double theta,
              const std::string& c_text) {
  const QuadratureSpec spec = spec_from(o);
  const Complex z = complex_arg(z_text, "z").value;
  if (z == Complex(0.0)) throw UsageError("--z must be nonzero");
  const auto pw = [](Complex w, double p) { return std::exp(p * std::log(w)); };
  LaplaceResult r;
  Complex oracle;
  Json extra = Json::object();
  if (object == "lambda32" || object == "chi" || object == "mu") {
    const BorelKind kind = object == "lambda32" ? BorelKind::minor_lambda_3_2
                           : object == "chi"    ? BorelKind::minor_chi
                                                : BorelKind::minor_mu;
    // The minors are single-valued on rays through the principal sector only.
    if (std::abs(theta) >= pi / 2.0 && kind != BorelKind::minor_mu) {
      throw UsageError("--theta must lie in (-pi/2, pi/2) for this object");
    }
    r = laplace_ray(BorelFunction::make(kind), Direction{theta}, z, spec);
    oracle = object == "lambda32" ? pw(z, -1.5) * lambda_ref(z)
             : object == "chi"    ? pw(z, -1.5) / lambda_ref(z)
                                  : std::log(lambda_ref(z));
  } else if (object == "realmajor") {
    const Complex c = complex_arg(c_text, "c").value;
    const RhoMajor rho(c, spec);
    r = laplace_real_major(rho, Direction{theta}, z, spec);
    oracle = lambda_ref(z, c);
    extra["c"] = complex_to_json(c);
  } else {
    throw UsageError("--object must be one of lambda32, chi, mu, realmajor");
  }
  Json j = laplace_to_json(r);
  j["object"] = object;
  j["oracle"] = complex_to_json(oracle);
  j["rel_error"] = std::abs(r.value - oracle) / std::abs(oracle);
  for (auto it = extra.begin(); it != extra.end(); ++it) j[it.key()] = it.value();
  emit_record(o, j);
  return ok;
}

// ---- stokes ----

int cmd_stokes(const Options& o, const std::string& z_text) {
  const Complex z = complex_arg(z_text, "z").value;
  const double a = std::arg(z);
  if (!(a > -pi && a < 0.0)) throw UsageError("--z needs -pi < arg z < 0");
  if (std::abs(z.imag()) < 1e-3) throw UsageError("--z is within 1e-3 of the real axis");
  const StokesRecord s = stokes_record(z, spec_from(o));
  emit_record(o, Json{{"z", complex_to_json(s.z)},
                      {"theta1", s.theta1},
                      {"theta2", s.theta2},
                      {"l1", complex_to_json(s.l1)},
                      {"l2", complex_to_json(s.l2)},
                      {"factor", complex_to_json(s.factor)},
                      {"identity_residual", s.identity_residual},
                      {"reflection_residual", s.reflection_residual},
                      {"oracle_error", s.oracle_error},
                      {"est_error", s.est_error},
                      {"panels", s.panels}});
  return ok;
}

// ---- realmajor ----

int cmd_realmajor(const Options& o, const std::string& c_text, const std::string& xi_text, bool nu, bool monodromy) {
  const QuadratureSpec spec = spec_from(o);
  const Complex c = complex_arg(c_text, "c").value;
  if (monodromy) {
    const RealMajorResult start = rho_lambda_c(c, 1.0, spec);
    const RealMajorResult loop = rho_continue(c, loop_around_2pi_i(-1.5 * pi), spec);
    Json j = real_major_to_json(1.0, 0.0, loop);
    j["start_value"] = complex_to_json(start.value);
    j["monodromy"] = std::abs(loop.value - start.value);
    emit_record(o, j);
    return ok;
  }
  const ParsedComplex p = complex_arg(xi_text, "xi");
  const SurfacePoint xi = p.surface();
  if (!(xi.r > 0.0)) throw UsageError("--xi must be nonzero");
  RealMajorResult r;
  if (nu) {
    if (std::abs(xi.theta) >= pi) throw UsageError("--nu needs |arg xi| < pi");
    r = rho_nu_c(c, xi.value(), spec);
  } else if (std::abs(xi.theta) < pi) {
    r = rho_lambda_c(c, std::polar(xi.r, xi.theta), spec);
  } else if (std::abs(xi.theta) == pi) {
    r = rho_lambda_c_axis(c, xi.r, xi.theta > 0 ? 1 : -1, spec);
  } else {
    r = rho_continue(c, arc_path(xi.r, 0.0, xi.theta), spec);
  }
  emit_record(o, real_major_to_json(xi.value(), xi.theta, r));
  return ok;
}

// ---- alien ----

int cmd_alien(const Options& o, const std::string& op, long m, const std::string& object) {
  if (m == 0) throw UsageError("--m must be nonzero");
  if (op != "plus" && op != "full") throw UsageError("--op must be plus or full");
  BorelKind kind;
  if (object == "lambda32") {
    kind = BorelKind::minor_lambda_3_2;
  } else if (object == "chi") {
    kind = BorelKind::minor_chi;
  } else {
    throw UsageError("--object must be lambda32 or chi");
  }
  const BorelFunction f = BorelFunction::make(kind);
  const Complex omega(0.0, 2.0 * pi * static_cast<double>(m));
  const SingularityData s = op == "plus" ? alien_plus(f, omega) : alien(f, omega);
  const GermComparison g = compare_germ(s, f);
  Json samples = Json::array();
  for (const auto& smp : g.samples) {
    samples.push_back(Json{{"rho", smp.rho},
                           {"alpha", smp.alpha},
                           {"germ", complex_to_json(smp.germ)},
                           {"reference", complex_to_json(smp.reference)},
                           {"ratio", complex_to_json(smp.ratio)}});
  }
  emit_record(o, Json{{"operator", op},
                      {"object", object},
                      {"omega", complex_to_json(omega)},
                      {"mean_ratio", complex_to_json(g.mean_ratio)},
                      {"ratio_spread", g.ratio_spread},
                      {"relative_magnitude", g.relative_magnitude},
                      {"samples", samples}});
  return ok;
}

// ---- grid ----

int cmd_grid(const Options& o, const std::string& object, GridSpec grid) {
  static const std::map<std::string, BorelKind> kinds = {{"minor_lambda32", BorelKind::minor_lambda_3_2},
                                                         {"major_lambda32", BorelKind::major_lambda_3_2},
                                                         {"minor_chi", BorelKind::minor_chi},
                                                         {"major_chi", BorelKind::major_chi},
                                                         {"minor_mu", BorelKind::minor_mu}};
  const auto it = kinds.find(object);
  if (it == kinds.end()) throw UsageError("--object must name a minor_/major_ function");
  if (grid.n_re < 1 || grid.n_im < 1) throw UsageError("grid sizes must be positive");
  const std::vector<GridSample> samples = sample_grid(BorelFunction::make(it->second), grid);
  if (o.format == "csv") {
    emit(o, grid_to_csv(samples));
  } else {
    Json rows = Json::array();
    for (const GridSample& s : samples) {
      rows.push_back(Json{{"xi", complex_to_json(s.xi)},
                          {"sheet_theta", s.sheet_theta},
                          {"value", s.kind == "value" ? complex_to_json(s.value) : Json(nullptr)},
                          {"kind", s.kind}});
    }
    emit(o, rows.dump(2));
  }
  return ok;
}

// ---- verify ----

int cmd_verify(const Options& o, const std::string& suite_name) {
  const auto suite = parse_suite(suite_name);
  if (!suite) throw UsageError("unknown suite '" + suite_name + "' (expected fast or full)");
  const SuiteReport rep = run_suite(*suite, [](const CheckResult& r) { std::cerr << format_line(r) << '\n'; });
  emit(o, to_json(rep).dump(2));
  return rep.all_passed() ? ok : verification_failure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Resurgent resummation of the Gamma-function normalization"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;
  app.add_option("--tol", opt.tol, "Relative quadrature tolerance")->check(CLI::PositiveNumber);
  app.add_option("--order", opt.order, "Series order for coeffs");
  app.add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--out", opt.out, "Output file (default stdout)");

  int kmax = 7;
  auto* coeffs = app.add_subcommand("coeffs", "Exact a_k, lambda~ and Stirling coefficients");
  coeffs->add_option("--kmax", kmax, "Number of a_k");

  std::string object = "lambda32", z_text, c_text = "0", xi_text;
  double theta = 0.0;
  auto* resum = app.add_subcommand("resum", "Laplace resummation against the oracle");
  resum->add_option("--object", object, "lambda32, chi, mu or realmajor");
  resum->add_option("--z", z_text, "Point z (RE+IMj or R@THETA)")->required();
  resum->add_option("--theta", theta, "Laplace direction");
  resum->add_option("--c", c_text, "Index c for realmajor");

  auto* stokes = app.add_subcommand("stokes", "Lateral sums and the reflection formula");
  stokes->add_option("--z", z_text, "Point z with -pi < arg z < 0")->required();

  bool nu = false, monodromy = false;
  auto* realmajor = app.add_subcommand("realmajor", "Real-major of lambda_c or nu_c");
  realmajor->add_option("--c", c_text, "Index c");
  realmajor->add_option("--xi", xi_text, "Point xi; polar THETA beyond pi continues along an arc");
  realmajor->add_flag("--nu", nu, "Use nu_c instead of lambda_c");
  realmajor->add_flag("--monodromy", monodromy, "Continue once around 2 pi i on the -3pi/2 sheet");

  std::string op = "plus";
  long m = 1;
  std::string alien_object = "lambda32";
  auto* alien_cmd = app.add_subcommand("alien", "Alien-operator germ comparison at 2 pi i m");
  alien_cmd->add_option("--op", op, "plus or full");
  alien_cmd->add_option("--m", m, "Singular point index");
  alien_cmd->add_option("--object", alien_object, "lambda32 or chi");

  GridSpec grid;
  std::string grid_object = "minor_lambda32";
  auto* grid_cmd = app.add_subcommand("grid", "Borel-plane samples on a rectangular grid");
  grid_cmd->add_option("--object", grid_object, "minor_lambda32, major_lambda32, minor_chi, major_chi, minor_mu");
  grid_cmd->add_option("--re-min", grid.re_min);
  grid_cmd->add_option("--re-max", grid.re_max);
  grid_cmd->add_option("--im-min", grid.im_min);
  grid_cmd->add_option("--im-max", grid.im_max);
  grid_cmd->add_option("--n-re", grid.n_re);
  grid_cmd->add_option("--n-im", grid.n_im);
  grid_cmd->add_option("--sheet", grid.sheet_theta, "Offset added to the principal argument");

  std::string suite = "fast";
  auto* verify = app.add_subcommand("verify", "Run an acceptance suite");
  verify->add_option("suite", suite, "fast or full")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? ok : usage;
  }

  try {
    if (*coeffs) return cmd_coeffs(opt, kmax);
    if (*resum) return cmd_resum(opt, object, z_text, theta, c_text);
    if (*stokes) return cmd_stokes(opt, z_text);
    if (*realmajor) {
      if (xi_text.empty() && !monodromy) throw UsageError("realmajor needs --xi or --monodromy");
      return cmd_realmajor(opt, c_text, xi_text, nu, monodromy);
    }
    if (*alien_cmd) return cmd_alien(opt, op, m, alien_object);
    if (*grid_cmd) return cmd_grid(opt, grid_object, grid);
    if (*verify) return cmd_verify(opt, suite);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return usage;
  } catch (const DomainError& e) {
    std::cerr << "domain error: " << e.what() << '\n';
    return usage;
  } catch (const std::exception& e) {
    std::cerr << "numerical failure: " << e.what() << '\n';
    return numerical;
  }
  return usage;
}
