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

#pragma once

#include <complex>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "ellded/errors.hpp"

namespace ellded {

using cplx = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr cplx kTwoPiI{0.0, 2.0 * kPi};
/// Unit roundoff of binary64.
inline constexpr double kUnitRoundoff = 1.1102230246251565e-16;

/// Parses "a+bi", "a-bi", "bi", "i" or a plain real "a".
/// Throws std::invalid_argument on anything else.
cplx parse_complex(std::string_view text);

/// A point tau in the upper half-plane together with its nome e^{2 pi i tau}.
class TauPoint {
 public:
  /// Throws HalfPlaneError unless Im(tau) > 0.
  explicit TauPoint(cplx tau);

  /// parse_complex followed by the half-plane check.
  static TauPoint parse(std::string_view text);

  const cplx& tau() const { return tau_; }
  const cplx& nome() const { return nome_; }
  double im() const { return tau_.imag(); }

  /// The point t * tau for real t > 0.
  TauPoint scaled(double t) const;
  TauPoint shifted(double real_offset) const { return TauPoint(tau_ + real_offset); }

 private:
  cplx tau_;
  cplx nome_;
};

/// A complex value with an a-posteriori error bound.
///
/// err covers the discarded series tail plus an estimate of the binary64
/// rounding accumulated while summing. The arithmetic operators propagate
/// both to first order.
struct ComplexVal {
  cplx value{};
  double err = 0.0;

  ComplexVal() = default;
  ComplexVal(cplx v, double e = 0.0) : value(v), err(e) {}  // NOLINT(google-explicit-constructor)

  double abs() const { return std::abs(value); }

  friend ComplexVal operator+(const ComplexVal& a, const ComplexVal& b);
  friend ComplexVal operator-(const ComplexVal& a, const ComplexVal& b);
  friend ComplexVal operator*(const ComplexVal& a, const ComplexVal& b);
  friend ComplexVal operator/(const ComplexVal& a, const ComplexVal& b);
  ComplexVal operator-() const { return {-value, err}; }
  ComplexVal& operator+=(const ComplexVal& o) { return *this = *this + o; }
  ComplexVal& operator-=(const ComplexVal& o) { return *this = *this - o; }
  ComplexVal& operator*=(const ComplexVal& o) { return *this = *this * o; }
};

/// Exact complex scalars (as far as binary64 allows) multiply without
/// contributing their own error.
ComplexVal scale(cplx s, const ComplexVal& v);

struct SeriesPolicy {
  double tol = 1e-12;
  long max_terms = 1'000'000;
  double min_im_tau = 0.05;

  /// Throws ArgumentError if tol <= 0 or max_terms < 1.
  void validate() const;
};

/// Square truncation max(|m|, |n|) <= radius of a lattice sum.
struct LatticeCutoff {
  int radius = 200;
  explicit LatticeCutoff(int r);
};

/// A series hit max_terms before reaching the requested tolerance.
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, ComplexVal partial)
      : std::runtime_error(what), partial_(partial) {}
  const ComplexVal& partial() const { return partial_; }

 private:
  ComplexVal partial_;
};

/// Where slow-convergence warnings go; stderr by default. Pass an empty
/// function to silence.
void set_warning_sink(std::function<void(const std::string&)> sink);

/// Rejects Im(tau) < policy.min_im_tau and warns in the slow-nome band.
/// Returns the term cap to use for this tau.
long checked_term_cap(const TauPoint& tau, const SeriesPolicy& policy);

/// e^{w} - 1 without cancellation near w = 0.
cplx cexpm1(cplx w);

/// E_{2n}(tau) = 2 zeta(2n) + 2 (2 pi i)^{2n}/(2n-1)! sum sigma_{2n-1}(k) q^k.
ComplexVal eisenstein(int n, const TauPoint& tau, const SeriesPolicy& policy = {});

/// G_{2n}(tau) = -B_{2n}/(4n) + sum sigma_{2n-1}(k) q^k.
ComplexVal eisenstein_normalized(int n, const TauPoint& tau, const SeriesPolicy& policy = {});

/// d E_{2n} / d tau, termwise.
ComplexVal eisenstein_tau_derivative(int n, const TauPoint& tau, const SeriesPolicy& policy = {});

/// Elliptic Bernoulli function B_m(x, y; tau) from its q-expansion.
/// m = 0 returns 1. Throws SingularityError when x - y tau is a lattice point.
ComplexVal elliptic_bernoulli(int m, double x, double y, const TauPoint& tau,
                              const SeriesPolicy& policy = {});

/// Weierstrass zeta(z; tau) for the lattice Z tau + Z.
ComplexVal weierstrass_zeta(cplx z, const TauPoint& tau, const SeriesPolicy& policy = {});

/// zeta^{(s)}(z; tau) for s >= 1, i.e. -wp^{(s-1)}(z; tau).
ComplexVal zeta_derivative(int s, cplx z, const TauPoint& tau, const SeriesPolicy& policy = {});

/// wp^{(k)}(z; tau) for k >= 0.
ComplexVal weierstrass_p_deriv(int k, cplx z, const TauPoint& tau, const SeriesPolicy& policy = {});

/// d log sigma(z; tau) / d tau at fixed z. Needs |Im z| < Im tau.
ComplexVal log_sigma_tau_derivative(cplx z, const TauPoint& tau, const SeriesPolicy& policy = {});

/// Truncated lattice sum C_k(z) = sum' chi(w conj(z)) / w^k over
/// w = m tau + n, max(|m|, |n|) <= R, chi(v) = exp(2 pi i Im(v) / Im tau).
/// err is a bound on the discarded tail. Requires k >= 3.
ComplexVal kronecker_direct(int k, cplx z, const TauPoint& tau, const LatticeCutoff& cutoff);

/// zeta(2n + 1) to absolute accuracy tol.
double zeta_odd(int n, double tol = 1e-15);

/// Bernoulli polynomial B_k(x) in binary64.
double bernoulli_polynomial_d(int k, double x);

}  // namespace ellded
