#include "resurgence/serialization.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace resurgence {

namespace {

double parse_double(std::string_view s, std::string_view what) {
  if (s.empty()) throw DomainError("empty number in " + std::string(what));
  if (s.front() == '+') s.remove_prefix(1);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || !std::isfinite(v)) {
    throw DomainError("malformed number '" + std::string(s) + "' in " + std::string(what));
  }
  return v;
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

std::string rational_string(const Rational& q) {
  const BigInt n = numerator(q), d = denominator(q);
  return d == 1 ? n.str() : n.str() + "/" + d.str();
}

Rational parse_rational(std::string_view s) {
  const auto valid_int = [](std::string_view t) {
    if (!t.empty() && t.front() == '-') t.remove_prefix(1);
    return !t.empty() && t.find_first_not_of("0123456789") == std::string_view::npos;
  };
  const auto slash = s.find('/');
  const std::string_view num = s.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view("1") : s.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den) || den.front() == '-') {
    throw DomainError("malformed rational '" + std::string(s) + "'");
  }
  const BigInt d(std::string{den});
  if (d == 0) throw DomainError("rational with zero denominator");
  return Rational(BigInt(std::string{num}), d);
}

Json series_to_json(const RationalSeries& s) {
  Json coeffs = Json::array();
  for (const Rational& q : s.body.coefficients()) {
    coeffs.push_back({numerator(q).str(), denominator(q).str()});
  }
  return Json{{"shift", rational_string(s.shift)}, {"coeffs", coeffs}};
}

RationalSeries series_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("shift") || !j.contains("coeffs") || !j["coeffs"].is_array()) {
    throw DomainError("series JSON needs \"shift\" and \"coeffs\"");
  }
  std::vector<Rational> c;
  for (const auto& e : j["coeffs"]) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string()) {
      throw DomainError("series coefficient must be [\"num\", \"den\"]");
    }
    c.push_back(parse_rational(e[0].get<std::string>() + "/" + e[1].get<std::string>()));
  }
  if (c.empty()) throw DomainError("series JSON has no coefficients");
  const int order = static_cast<int>(c.size()) - 1;
  return RationalSeries{PowerSeries(std::move(c), order), parse_rational(j["shift"].get<std::string>())};
}

Json complex_to_json(Complex z) { return Json::array({z.real(), z.imag()}); }

Json laplace_to_json(const LaplaceResult& r) {
  return Json{{"z", complex_to_json(r.z)},
              {"theta", r.theta},
              {"value", complex_to_json(r.value)},
              {"est_error", r.est_error},
              {"panels", r.panels}};
}

Json real_major_to_json(Complex xi, double theta, const RealMajorResult& r) {
  return Json{{"z", complex_to_json(xi)},     {"theta", theta},    {"value", complex_to_json(r.value)},
              {"est_error", r.est_error}, {"panels", r.panels}, {"qpath_nodes", r.qpath_nodes}};
}

std::string grid_csv_header() { return "re_xi,im_xi,sheet_theta,re_val,im_val,kind"; }

std::string grid_to_csv(const std::vector<GridSample>& samples) {
  std::ostringstream os;
  os << grid_csv_header() << '\n';
  for (const GridSample& s : samples) {
    const bool has_value = s.kind == "value";
    os << fmt(s.xi.real()) << ',' << fmt(s.xi.imag()) << ',' << fmt(s.sheet_theta) << ','
       << (has_value ? fmt(s.value.real()) : "nan") << ',' << (has_value ? fmt(s.value.imag()) : "nan") << ','
       << s.kind << '\n';
  }
  return os.str();
}

SurfacePoint ParsedComplex::surface() const {
  if (polar) return {std::abs(value), theta};
  return SurfacePoint::from_complex(value);
}

ParsedComplex parse_complex(std::string_view s) {
  ParsedComplex out;
  if (s.empty()) throw DomainError("empty complex number");
  if (const auto at = s.find('@'); at != std::string_view::npos) {
    const double r = parse_double(s.substr(0, at), "polar radius");
    const double t = parse_double(s.substr(at + 1), "polar angle");
    if (!(r >= 0.0)) throw DomainError("polar radius must be non-negative");
    out.polar = true;
    out.theta = t;
    out.value = std::polar(r, t);
    return out;
  }
  if (s.back() != 'j') {
    out.value = parse_double(s, "complex number");
  } else {
    const std::string_view body = s.substr(0, s.size() - 1);
    // The sign separating real and imaginary parts, skipping exponent signs.
    std::size_t split = std::string_view::npos;
    for (std::size_t i = body.size(); i-- > 1;) {
      if ((body[i] == '+' || body[i] == '-') && body[i - 1] != 'e' && body[i - 1] != 'E') {
        split = i;
        break;
      }
    }
    if (split == std::string_view::npos) {
      const double im = body.empty() || body == "+" ? 1.0 : body == "-" ? -1.0 : parse_double(body, "imaginary part");
      out.value = Complex(0.0, im);
    } else {
      const std::string_view ims = body.substr(split);
      const double im = ims == "+" ? 1.0 : ims == "-" ? -1.0 : parse_double(ims, "imaginary part");
      out.value = Complex(parse_double(body.substr(0, split), "real part"), im);
    }
  }
  out.theta = std::arg(out.value);
  return out;
}

}  // namespace resurgence
