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
#include <string>
#include <vector>

#include "ellded/exact.hpp"
#include "ellded/qseries.hpp"
#include "summation.hpp"

namespace ellded {

namespace {

// Row s of the Eulerian triangle: sum_{n>=1} n^s x^n = x A_s(x) / (1-x)^{s+1}.
std::vector<double> eulerian_row(int s) {
  std::vector<double> a{1.0};
  for (int n = 2; n <= s; ++n) {
    std::vector<double> next(n, 0.0);
    for (int k = 0; k < n; ++k) {
      const double keep = k < static_cast<int>(a.size()) ? (k + 1) * a[k] : 0.0;
      const double shift = (k >= 1 && k - 1 < static_cast<int>(a.size())) ? (n - k) * a[k - 1] : 0.0;
      next[k] = keep + shift;
    }
    a = std::move(next);
  }
  return a;
}

cplx ipow(cplx b, int e) {
  cplx r = 1.0;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

cplx eulerian_poly(const std::vector<double>& a, cplx x) {
  cplx acc = 0.0;
  for (auto it = a.rbegin(); it != a.rend(); ++it) acc = acc * x + *it;
  return acc;
}

// x A_s(x) / (1-x)^{s+1}, with 1 - x supplied separately so the caller can
// compute it without cancellation.
cplx f_s(const std::vector<double>& a, int s, cplx x, cplx one_minus_x) {
  return x * eulerian_poly(a, x) / ipow(one_minus_x, s + 1);
}

}  // namespace

ComplexVal zeta_derivative(int s, cplx z, const TauPoint& tau, const SeriesPolicy& policy) {
  if (s < 1) throw ArgumentError("zeta_derivative: order must be >= 1");
  const long cap = checked_term_cap(tau, policy);
  const cplx t = tau.tau();

  // Reduce to 0 <= Im z <= Im tau / 2, |Re z| <= 1/2.
  cplx zr = z - std::round(z.imag() / t.imag()) * t;
  double sign = 1.0;
  if (zr.imag() < 0.0) {
    zr = -zr;
    if (s % 2 == 0) sign = -1.0;
  }
  zr -= std::round(zr.real());
  if (zr == cplx(0.0, 0.0)) throw SingularityError("zeta_derivative: z is a lattice point");

  const std::vector<double> a = eulerian_row(s);
  const cplx q = tau.nome();
  const double aq = std::abs(q);
  const cplx w = kTwoPiI * zr;
  const cplx u = std::exp(w);
  const cplx uinv = 1.0 / u;
  const double parity = (s % 2 == 0) ? 1.0 : -1.0;  // (-1)^s

  detail::KahanSum acc;
  acc.add(f_s(a, s, u, -cexpm1(w)));
  cplx qj = 1.0;
  double tail = 0.0;
  double sfact = 1.0;
  for (int i = 2; i <= s; ++i) sfact *= i;
  const double umax = std::max(std::abs(u), std::abs(uinv));
  for (long j = 1;; ++j) {
    qj *= q;
    const cplx x1 = u * qj;
    const cplx x2 = uinv * qj;
    acc.add(f_s(a, s, x1, 1.0 - x1));
    acc.add(-parity * f_s(a, s, x2, 1.0 - x2));
    const double lead = std::abs(qj) * aq * umax;
    if (lead < 1.0) {
      tail = 2.0 * sfact * lead / ((1.0 - aq) * std::pow(1.0 - lead, s + 1));
      if (tail <= policy.tol * acc.abs_sum()) break;
    }
    if (j >= cap)
      throw ConvergenceError("zeta_derivative did not converge within " + std::to_string(cap) + " terms",
                             ComplexVal(acc.value(), INFINITY));
  }

  const cplx pref = ipow(kTwoPiI, s + 1);
  const double apref = std::abs(pref);
  ComplexVal result(-pref * acc.value(), apref * tail + (8.0 + 4.0 * s) * kUnitRoundoff * apref * acc.abs_sum());
  if (s == 1) result = result + eisenstein(1, tau, policy);
  // Rounding of z during reduction, propagated through one more derivative.
  const double shift_err = kUnitRoundoff * (std::abs(z) + 1.0) * (s + 1) * result.abs() / std::abs(zr);
  result.err += shift_err;
  result.value *= sign;
  return result;
}

ComplexVal weierstrass_p_deriv(int k, cplx z, const TauPoint& tau, const SeriesPolicy& policy) {
  if (k < 0) throw ArgumentError("weierstrass_p_deriv: order must be >= 0");
  return -zeta_derivative(k + 1, z, tau, policy);
}

ComplexVal weierstrass_zeta(cplx z, const TauPoint& tau, const SeriesPolicy& policy) {
  const cplx t = tau.tau();
  const double y = -z.imag() / t.imag();
  const double x = z.real() + y * t.real();
  const double ky = std::floor(y);
  double yr = y - ky;
  double kyy = ky;
  if (yr >= 1.0) {
    yr = 0.0;
    kyy += 1.0;
  }
  const double kx = std::round(x);
  const double xr = x - kx;
  const cplx z2 = xr - yr * t;

  const ComplexVal e2 = eisenstein(1, tau, policy);
  const ComplexVal b1 = elliptic_bernoulli(1, xr, yr, tau, policy);
  // Inverse of B_1(x, y) = -(zeta(z) - E_2 z) / (2 pi i) + y at z = x - y tau.
  ComplexVal val = scale(-kTwoPiI, b1 - ComplexVal(yr)) + scale(z2, e2);
  val = val + scale(kx, e2) - scale(kyy, scale(t, e2) - ComplexVal(kTwoPiI));
  val.err += kUnitRoundoff * (std::abs(z) + 1.0) * (1.0 / std::norm(z2) + e2.abs());
  return val;
}

ComplexVal log_sigma_tau_derivative(cplx z, const TauPoint& tau, const SeriesPolicy& policy) {
  const long cap = checked_term_cap(tau, policy);
  if (!(std::abs(z.imag()) < tau.im()))
    throw ArgumentError("log_sigma_tau_derivative: needs |Im z| < Im tau");
  const cplx q = tau.nome();
  const double aq = std::abs(q);
  const cplx u = std::exp(kTwoPiI * z);
  const cplx uinv = 1.0 / u;
  const double umax = std::max(std::abs(u), std::abs(uinv));
  if (std::abs(1.0 - u) == 0.0) throw SingularityError("log_sigma_tau_derivative: z is a lattice point");

  detail::KahanSum acc;
  cplx qj = 1.0;
  double tail = 0.0;
  for (long j = 1;; ++j) {
    qj *= q;
    const cplx a = qj * u;
    const cplx b = qj * uinv;
    const cplx term = kTwoPiI * static_cast<double>(j) * (-a / (1.0 - a) - b / (1.0 - b) + 2.0 * qj / (1.0 - qj));
    acc.add(term);
    const double r = aq;
    const double lead = std::pow(r, j + 1) * umax;
    if (lead < 1.0) {
      const double jj = static_cast<double>(j);
      const double moment = std::pow(r, j + 1) * ((jj + 1.0) * (1.0 - r) + r) / ((1.0 - r) * (1.0 - r));
      tail = 2.0 * kPi * moment * (2.0 * umax / (1.0 - lead) + 2.0 / (1.0 - r));
      if (tail <= policy.tol * (acc.abs_sum() + 1e-300)) break;
    }
    if (j >= cap)
      throw ConvergenceError("log_sigma_tau_derivative did not converge within " + std::to_string(cap) + " terms",
                             ComplexVal(acc.value(), INFINITY));
  }
  const ComplexVal de2 = eisenstein_tau_derivative(1, tau, policy);
  ComplexVal series(acc.value(), tail + 16.0 * kUnitRoundoff * acc.abs_sum());
  return scale(0.5 * z * z, de2) + series;
}

}  // namespace ellded
