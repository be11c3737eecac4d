// Copyright 2026 The ellded Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cmath>
#include <iostream>
#include <mutex>
#include <regex>
#include <sstream>
#include <string>

#include "ellded/qseries.hpp"

namespace ellded {

TauPoint::TauPoint(cplx tau) : tau_(tau) {
  if (!(tau.imag() > 0.0) || !std::isfinite(tau.real()) || !std::isfinite(tau.imag())) {
    std::ostringstream os;
    os << "tau = " << tau.real() << (tau.imag() < 0 ? "" : "+") << tau.imag() << "i is not in the upper half-plane";
    throw HalfPlaneError(os.str());
  }
  nome_ = std::exp(kTwoPiI * tau_);
}

cplx parse_complex(std::string_view text) {
  static const std::string num = R"((?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)";
  static const std::regex full("^\\s*([+-]?" + num + ")\\s*([+-])\\s*(" + num + ")?\\s*\\*?\\s*i\\s*$");
  static const std::regex imag_only("^\\s*([+-]?(?:" + num + ")?)\\s*\\*?\\s*i\\s*$");
  static const std::regex real_only("^\\s*([+-]?" + num + ")\\s*$");
  const std::string s(text);
  std::smatch m;
  if (std::regex_match(s, m, full)) {
    double im = m[3].matched ? std::stod(m[3].str()) : 1.0;
    if (m[2].str() == "-") im = -im;
    return {std::stod(m[1].str()), im};
  }
  if (std::regex_match(s, m, imag_only)) {
    const std::string b = m[1].str();
    return {0.0, (b.empty() || b == "+") ? 1.0 : (b == "-" ? -1.0 : std::stod(b))};
  }
  if (std::regex_match(s, m, real_only)) return {std::stod(m[1].str()), 0.0};
  throw std::invalid_argument("cannot parse complex number '" + s + "' (expected a+bi)");
}

TauPoint TauPoint::parse(std::string_view text) { return TauPoint(parse_complex(text)); }

TauPoint TauPoint::scaled(double t) const {
  if (!(t > 0.0)) throw ArgumentError("TauPoint::scaled: factor must be positive");
  return TauPoint(tau_ * t);
}

void SeriesPolicy::validate() const {
  if (!(tol > 0.0)) throw ArgumentError("SeriesPolicy: tol must be positive");
  if (max_terms < 1) throw ArgumentError("SeriesPolicy: max_terms must be >= 1");
}

LatticeCutoff::LatticeCutoff(int r) : radius(r) {
  if (r < 1) throw ArgumentError("LatticeCutoff: radius must be >= 1");
}

namespace {

constexpr double kSlowNomeIm = 0.11;

std::mutex g_sink_mutex;
std::function<void(const std::string&)> g_sink = [](const std::string& msg) {
  std::cerr << "warning: " << msg << '\n';
};

}  // namespace

void set_warning_sink(std::function<void(const std::string&)> sink) {
  std::lock_guard lock(g_sink_mutex);
  g_sink = std::move(sink);
}

long checked_term_cap(const TauPoint& tau, const SeriesPolicy& policy) {
  policy.validate();
  if (tau.im() < policy.min_im_tau) {
    std::ostringstream os;
    os << "Im(tau) = " << tau.im() << " is below the accepted minimum " << policy.min_im_tau;
    throw HalfPlaneError(os.str());
  }
  if (tau.im() < kSlowNomeIm) {
    std::lock_guard lock(g_sink_mutex);
    if (g_sink) {
      std::ostringstream os;
      os << "Im(tau) = " << tau.im() << ": |q| = " << std::abs(tau.nome()) << ", series converge slowly";
      g_sink(os.str());
    }
    return policy.max_terms * 10;
  }
  return policy.max_terms;
}

cplx cexpm1(cplx w) {
  const double a = w.real();
  const double b = w.imag();
  const double s = std::sin(0.5 * b);
  const double re = std::expm1(a) * std::cos(b) - 2.0 * s * s;
  const double im = std::exp(a) * std::sin(b);
  return {re, im};
}

}  // namespace ellded
