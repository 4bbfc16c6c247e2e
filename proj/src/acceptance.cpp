#include "resurgence/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <random>

#include "resurgence/alien.hpp"
#include "resurgence/lambert_w.hpp"
#include "resurgence/reference.hpp"
#include "resurgence/stokes.hpp"

namespace resurgence {

namespace {

using std::numbers::pi;
using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Outcome {
  double residual = 0.0;
  bool extra_ok = true;
  std::string detail;
};

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

double rel(Complex a, Complex b) { return std::abs(a - b) / std::abs(b); }

Complex pow_principal(Complex z, double p) { return std::exp(p * std::log(z)); }

QuadratureSpec default_spec() { return QuadratureSpec{}; }

Outcome check_a_coefficients(Suite) {
  const auto t0 = Clock::now();
  const std::vector<std::string> expected = {"1", "1/3", "1/36", "-1/270", "1/4320", "1/17010", "-139/5443200"};
  const std::vector<Rational> a = a_coefficients(7);
  int mismatches = 0;
  for (std::size_t k = 0; k < expected.size(); ++k) mismatches += a.at(k) != parse_rational(expected[k]);
  const double secs = since(t0);
  return {static_cast<double>(mismatches), secs < 1.0,
          std::to_string(mismatches) + " mismatches among a_1..a_7, " + sci(secs) + " s (budget 1 s)"};
}

int exp_mismatches(int order) {
  const RationalSeries lhs = series_exp(stirling_series(order));
  const RationalSeries rhs = lambda_tilde(order);
  int bad = lhs.shift != rhs.shift;
  for (int n = 0; n <= order; ++n) bad += lhs.coefficient(n) != rhs.coefficient(n);
  return bad;
}

Outcome check_stirling_exponential(Suite suite) {
  const auto t0 = Clock::now();
  int bad = exp_mismatches(12);
  const double secs = since(t0);
  std::string detail = "through z^-12: " + std::to_string(bad) + " mismatches, " + sci(secs) + " s (budget 5 s)";
  if (suite == Suite::full) {
    const int extra = exp_mismatches(24);
    bad += extra;
    detail += "; through z^-24: " + std::to_string(extra) + " mismatches";
  }
  return {static_cast<double>(bad), secs < 5.0, detail};
}

const std::vector<Complex> kLambdaPoints = {2.0, 5.0, 10.0, {3.0, 3.0}};

Complex laplace0(BorelKind kind, Complex z, const QuadratureSpec& spec) {
  return laplace_ray(BorelFunction::make(kind), Direction{0.0}, z, spec).value;
}

Outcome check_laplace_lambda(Suite suite) {
  const auto t0 = Clock::now();
  std::vector<Complex> zs = kLambdaPoints;
  if (suite == Suite::full) zs.insert(zs.end(), {{1.5, -2.0}, 25.0});
  double worst = 0.0;
  for (const Complex z : zs) {
    const Complex ref = pow_principal(z, -1.5) * lambda_ref(z);
    worst = std::max(worst, rel(laplace0(BorelKind::minor_lambda_3_2, z, default_spec()), ref));
  }
  const double secs = since(t0);
  return {worst, secs < 30.0, std::to_string(zs.size()) + " points, " + sci(secs) + " s (budget 30 s)"};
}

Outcome check_laplace_chi(Suite suite) {
  std::vector<Complex> zs = {2.0, 5.0, {3.0, 3.0}};
  if (suite == Suite::full) zs.insert(zs.end(), {10.0, {4.0, -1.0}});
  double worst = 0.0;
  for (const Complex z : zs) {
    const Complex ref = pow_principal(z, -1.5) / lambda_ref(z);
    worst = std::max(worst, rel(laplace0(BorelKind::minor_chi, z, default_spec()), ref));
  }
  return {worst, true, std::to_string(zs.size()) + " points"};
}

Outcome check_laplace_mu(Suite suite) {
  std::vector<Complex> zs = {3.0, 5.0, 10.0};
  if (suite == Suite::full) zs.insert(zs.end(), {{2.0, 2.0}, 40.0});
  double worst = 0.0;
  for (const Complex z : zs) {
    worst = std::max(worst, std::abs(laplace0(BorelKind::minor_mu, z, default_spec()) - std::log(lambda_ref(z))));
  }
  return {worst, true, "absolute error over " + std::to_string(zs.size()) + " points"};
}

Outcome check_hankel(Suite suite) {
  const BorelMajor major(BorelFunction::make(BorelKind::major_lambda_3_2));
  std::vector<double> deltas = {0.1, 0.5};
  if (suite == Suite::full) deltas.insert(deltas.end(), {0.05, 0.25});
  double worst = 0.0, spread = 0.0;
  for (const Complex z : kLambdaPoints) {
    const Complex minor_value = laplace0(BorelKind::minor_lambda_3_2, z, default_spec());
    worst = std::max(worst, rel(laplace_hankel(major, Direction{0.0}, z, default_spec()).value, minor_value));
    std::vector<Complex> vals;
    for (const double d : deltas) {
      QuadratureSpec spec;
      spec.hankel_delta = d;
      vals.push_back(laplace_hankel(major, Direction{0.0}, z, spec).value);
    }
    for (std::size_t i = 1; i < vals.size(); ++i) spread = std::max(spread, rel(vals[i], vals[0]));
  }
  return {worst, spread <= 1e-9, "delta spread " + sci(spread) + " (tolerance 1e-9)"};
}

Outcome check_real_major_roundtrip(Suite suite) {
  const QuadratureSpec spec;
  const RhoMajor rho(0.0, spec);
  double worst_trip = 0.0, worst_cross = 0.0;
  std::vector<Complex> zs = {2.0, 5.0, {3.0, 2.0}};
  for (const Complex z : zs) {
    worst_trip = std::max(worst_trip, rel(laplace_real_major(rho, Direction{0.0}, z, spec).value, lambda_ref(z)));
  }
  std::vector<Complex> cs = {0.0};
  std::vector<Complex> xis = {0.5, 1.0, {1.0, 1.0}};
  if (suite == Suite::full) {
    cs.insert(cs.end(), {-1.0, 0.25});
    xis.push_back(2.0);
  }
  for (const Complex c : cs) {
    for (const Complex xi : xis) {
      const auto lam = [c](double t) { return lambda_ref(t, c); };
      const Complex direct = laplace_ray(lam, Direction{0.0}, xi, spec, GrowthCertificate{0.0, 3.0}).value;
      worst_cross = std::max(worst_cross, rel(rho_lambda_c(c, xi, spec).value, direct));
    }
  }
  return {std::max(worst_trip, worst_cross), true,
          "round trip " + sci(worst_trip) + ", direct z-quadrature " + sci(worst_cross)};
}

Outcome check_real_major_nu(Suite suite) {
  const QuadratureSpec spec;
  std::vector<Complex> cs = {0.0};
  std::vector<Complex> xis = {0.5, 1.0};
  if (suite == Suite::full) {
    cs.push_back(-1.0);
    xis.push_back({1.0, 1.0});
  }
  double worst = 0.0;
  for (const Complex c : cs) {
    for (const Complex xi : xis) {
      const auto nu = [c](double t) { return nu_ref(t, c); };
      const Complex direct = laplace_ray(nu, Direction{0.0}, xi, spec, GrowthCertificate{0.0, 3.0}).value;
      worst = std::max(worst, rel(rho_nu_c(c, xi, spec).value, direct));
    }
  }
  return {worst, true, std::to_string(cs.size() * xis.size()) + " points"};
}

Outcome check_lambda1_contour(Suite) {
  QuadratureSpec spec;
  spec.rel_tol = 1e-15;
  const int n_pts = 64, n_max = 3;
  const double radius = 0.05;
  std::vector<Complex> vals;
  for (int j = 0; j < n_pts; ++j) vals.push_back(minor_lambda1_contour(std::polar(radius, 2.0 * pi * j / n_pts), spec));
  const std::vector<Rational> a = a_coefficients(2 * n_max + 1);
  double worst = 0.0;
  Rational fact = 1;
  for (int n = 0; n <= n_max; ++n) {
    if (n > 0) fact *= n;
    Complex acc;
    for (int j = 0; j < n_pts; ++j) acc += vals[static_cast<std::size_t>(j)] * std::polar(std::pow(radius, -n), -2.0 * pi * j * n / n_pts);
    const Complex cn = acc / static_cast<double>(n_pts);
    const double expected = static_cast<double>(Rational(double_factorial_odd(n)) * a[static_cast<std::size_t>(2 * n)] / fact);
    worst = std::max(worst, std::abs(cn - expected) / std::abs(expected));
  }
  return {worst, true, "Cauchy coefficients n = 0.." + std::to_string(n_max) + " on |xi| = 0.05"};
}

Outcome check_stokes(Suite suite) {
  std::vector<Complex> zs = {std::polar(2.0, -pi / 4.0), std::polar(5.0, -pi / 3.0)};
  if (suite == Suite::full) zs.insert(zs.end(), {std::polar(1.0, -2.5), std::polar(3.0, -0.2)});
  double worst = 0.0;
  for (const Complex z : zs) {
    const StokesRecord r = stokes_record(z, default_spec());
    worst = std::max({worst, r.identity_residual, r.reflection_residual});
  }
  return {worst, true, "max of lateral identity and reflection residuals"};
}

Outcome check_alien(Suite suite) {
  const BorelFunction f = BorelFunction::make(BorelKind::minor_lambda_3_2);
  std::vector<double> radii = kGermRadii;
  if (suite == Suite::full) radii.push_back(1e-5);
  struct Case {
    bool plus;
    long m;
    double expected;  // 0 means the germ must vanish
  };
  const std::vector<Case> cases = {{true, 1, 1.0},  {true, -1, -1.0}, {true, -2, 0.0}, {false, 1, 1.0},
                                   {false, -1, -1.0}, {false, 2, 0.5},  {false, -2, -0.5}};
  double worst = 0.0;
  std::string detail;
  for (const Case& c : cases) {
    const Complex omega(0.0, 2.0 * pi * static_cast<double>(c.m));
    const SingularityData s = c.plus ? alien_plus(f, omega) : alien(f, omega);
    const GermComparison g = compare_germ(s, f, radii);
    double dev = 0.0;
    if (c.expected == 0.0) {
      dev = g.relative_magnitude;
    } else {
      for (const auto& smp : g.samples) dev = std::max(dev, std::abs(smp.ratio - c.expected));
    }
    worst = std::max(worst, dev);
    detail += std::string(c.plus ? "D+" : "D") + "(" + std::to_string(c.m) + ") " + sci(dev) + "; ";
  }
  detail.erase(detail.size() - 2);
  return {worst, true, detail};
}

Outcome check_chi_symmetry(Suite suite) {
  std::mt19937_64 rng(20240611);
  std::uniform_real_distribution<double> rad(0.05, 5.0), ang(-1.2, 1.2);
  const int n = suite == Suite::full ? 200 : 20;
  double worst = 0.0;
  for (int k = 0; k < n; ++k) {
    const double r = rad(rng), th = ang(rng);
    const Complex lhs = minor_chi({r, th});
    const Complex rhs = Complex(0.0, 1.0) * minor_lambda32({r, th - pi});
    worst = std::max(worst, std::abs(lhs - rhs));
  }
  return {worst, true, std::to_string(n) + " samples"};
}

Outcome check_continuation(Suite suite) {
  const QuadratureSpec spec;
  std::vector<double> targets = {5.0 * pi / 4.0};
  if (suite == Suite::full) targets.push_back(-5.0 * pi / 4.0);
  double worst = 0.0;
  for (const double target : targets) {
    const Complex xi = std::polar(1.0, target);
    // z-ray inside (-pi, pi) with Re(z xi) > 0.
    const double zdir = target > 0 ? -7.0 * pi / 8.0 : 7.0 * pi / 8.0;
    const auto ray = [zdir](double t) { return lambda_ref(std::polar(t, zdir)); };
    const Complex oracle = laplace_ray(ray, Direction{zdir}, xi, spec, GrowthCertificate{0.0, 3.0}).value;
    worst = std::max(worst, rel(rho_continue(0.0, arc_path(1.0, 0.0, target), spec).value, oracle));
  }
  const Complex start = rho_lambda_c(0.0, 1.0, spec).value;
  const RealMajorResult looped = rho_continue(0.0, loop_around_2pi_i(-1.5 * pi), spec);
  const double monodromy = std::abs(looped.value - start);
  return {worst, monodromy > 1e-8,
          "monodromy |difference| " + sci(monodromy) + " (needs > 1e-8), " + std::to_string(looped.qpath_nodes) +
              " Q-path nodes"};
}

Outcome check_properties(Suite suite, Clock::time_point suite_start) {
  const int n_rad = suite == Suite::full ? 40 : 12, n_ang = suite == Suite::full ? 48 : 16;
  double w_res = 0.0;
  int wrong_branch = 0;
  for (int i = 0; i < n_rad; ++i) {
    const double r = std::pow(10.0, -3.0 + 6.0 * i / (n_rad - 1));
    for (int j = 0; j < n_ang; ++j) {
      const Complex x = std::polar(r, -pi + 2.0 * pi * (j + 0.5) / n_ang);
      for (int k = -3; k <= 3; ++k) {
        const Complex w = lambert_w(x, k).w;
        w_res = std::max(w_res, std::abs(w * std::exp(w) - x) / std::abs(x));
        wrong_branch += lambert_branch_of(w) != k;
      }
    }
  }
  double var_res = 0.0;
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> rad(0.05, 5.0), ang(-1.3, 1.3);
  const int n_var = suite == Suite::full ? 200 : 30;
  for (int k = 0; k < n_var; ++k) {
    const double r = rad(rng), th = ang(rng);
    const Complex v1 = major_lambda32({r, th}) - major_lambda32({r, th - 2.0 * pi});
    const Complex m1 = minor_lambda32({r, th});
    const Complex v2 = major_chi({r, th}) - major_chi({r, th - 2.0 * pi});
    const Complex m2 = minor_chi({r, th});
    var_res = std::max({var_res, std::abs(v1 - m1) / std::abs(m1), std::abs(v2 - m2) / std::abs(m2)});
  }
  const double total = since(suite_start);
  const bool time_ok = suite == Suite::full ? total <= 900.0 : total <= 60.0;
  return {std::max(w_res, var_res), time_ok && wrong_branch == 0,
          "Lambert W " + sci(w_res) + " (" + std::to_string(wrong_branch) + " off-branch), variation " +
              sci(var_res) + ", suite time " + sci(total) + " s"};
}

}  // namespace

std::optional<Suite> parse_suite(std::string_view name) {
  if (name == "fast") return Suite::fast;
  if (name == "full") return Suite::full;
  return std::nullopt;
}

std::string to_string(Suite s) { return s == Suite::fast ? "fast" : "full"; }

bool SuiteReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

SuiteReport run_suite(Suite suite, const std::function<void(const CheckResult&)>& on_result) {
  SuiteReport rep;
  rep.suite = suite;
  const auto suite_start = Clock::now();
  const auto run = [&](int id, const char* name, double tol, const std::function<Outcome()>& body) {
    CheckResult r;
    r.id = id;
    r.name = name;
    r.tolerance = tol;
    const auto t0 = Clock::now();
    try {
      const Outcome o = body();
      r.residual = o.residual;
      r.detail = o.detail;
      r.passed = o.extra_ok && std::isfinite(o.residual) && o.residual <= tol;
    } catch (const std::exception& e) {
      r.residual = std::numeric_limits<double>::infinity();
      r.detail = std::string("exception: ") + e.what();
      r.passed = false;
    }
    r.seconds = since(t0);
    rep.checks.push_back(r);
    if (on_result) on_result(r);
  };
  run(1, "exact-a-coefficients", 0.0, [&] { return check_a_coefficients(suite); });
  run(2, "stirling-exponential", 0.0, [&] { return check_stirling_exponential(suite); });
  run(3, "laplace-lambda32", 1e-8, [&] { return check_laplace_lambda(suite); });
  run(4, "laplace-chi", 1e-8, [&] { return check_laplace_chi(suite); });
  run(5, "laplace-mu", 1e-10, [&] { return check_laplace_mu(suite); });
  run(6, "hankel-major", 1e-7, [&] { return check_hankel(suite); });
  run(7, "real-major-roundtrip", 1e-6, [&] { return check_real_major_roundtrip(suite); });
  run(8, "real-major-nu", 1e-6, [&] { return check_real_major_nu(suite); });
  run(9, "lambda1-contour", 1e-7, [&] { return check_lambda1_contour(suite); });
  run(10, "stokes-reflection", 1e-6, [&] { return check_stokes(suite); });
  run(11, "alien-germs", 1e-6, [&] { return check_alien(suite); });
  run(12, "chi-symmetry", 1e-12, [&] { return check_chi_symmetry(suite); });
  run(13, "real-major-continuation", 1e-5, [&] { return check_continuation(suite); });
  run(14, "property-suites", 1e-12, [&] { return check_properties(suite, suite_start); });
  rep.seconds = since(suite_start);
  return rep;
}

std::string format_line(const CheckResult& r) {
  char buf[160];
  std::snprintf(buf, sizeof buf, "%s %2d %-24s residual=%-10.3g tol=%-8.3g (%.2f s)", r.passed ? "PASS" : "FAIL",
                r.id, r.name.c_str(), r.residual, r.tolerance, r.seconds);
  return std::string(buf) + "  " + r.detail;
}

Json to_json(const SuiteReport& rep) {
  Json checks = Json::array();
  for (const CheckResult& c : rep.checks) {
    checks.push_back(Json{{"id", c.id},
                          {"name", c.name},
                          {"passed", c.passed},
                          {"residual", std::isfinite(c.residual) ? Json(c.residual) : Json(nullptr)},
                          {"tolerance", c.tolerance},
                          {"seconds", c.seconds},
                          {"detail", c.detail}});
  }
  return Json{{"suite", to_string(rep.suite)},
              {"passed", rep.all_passed()},
              {"seconds", rep.seconds},
              {"checks", checks}};
}

}  // namespace resurgence
