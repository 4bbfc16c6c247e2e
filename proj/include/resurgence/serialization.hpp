#pragma once

// JSON and CSV encodings shared by the command-line tool and the tests.
//
//   series:     { "shift": "1/2", "coeffs": [["num", "den"], ...] }
//   laplace:    { "z": [re, im], "theta": t, "value": [re, im], "est_error": e, "panels": n }
//   real major: the laplace shape plus "qpath_nodes"
//   grid CSV:   re_xi,im_xi,sheet_theta,re_val,im_val,kind

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "resurgence/borel_plane.hpp"
#include "resurgence/exact_series.hpp"
#include "resurgence/laplace.hpp"
#include "resurgence/real_major.hpp"

namespace resurgence {

using Json = nlohmann::ordered_json;

std::string rational_string(const Rational& q);
/// Accepts "p/q" or an integer; throws DomainError otherwise.
Rational parse_rational(std::string_view s);

Json series_to_json(const RationalSeries& s);
RationalSeries series_from_json(const Json& j);

Json complex_to_json(Complex z);
Json laplace_to_json(const LaplaceResult& r);
/// `xi` is the evaluation point, reported under "z"; theta is its surface argument.
Json real_major_to_json(Complex xi, double theta, const RealMajorResult& r);

std::string grid_csv_header();
std::string grid_to_csv(const std::vector<GridSample>& samples);

/// A complex number given as "RE+IMj" (also "RE", "IMj", "RE-IMj") or
/// polar "R@THETA". Polar input keeps THETA as a surface argument.
struct ParsedComplex {
  Complex value;
  double theta = 0.0;
  bool polar = false;
  SurfacePoint surface() const;
};

/// Throws DomainError on malformed input.
ParsedComplex parse_complex(std::string_view s);

}  // namespace resurgence
