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

#include "ellded/exact.hpp"
#include "ellded/qseries.hpp"
#include "summation.hpp"

namespace ellded {

double bernoulli_polynomial_d(int k, double x) {
  if (k < 0) throw ArgumentError("bernoulli_polynomial_d: k must be >= 0");
  double acc = 0.0;
  for (int j = k; j >= 0; --j) acc = acc * x + (binomial(k, j) * bernoulli_number(k - j)).to_double();
  return acc;
}

namespace {

double int_pow(double b, int e) {
  double r = 1.0;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

}  // namespace

ComplexVal elliptic_bernoulli(int m, double x, double y, const TauPoint& tau, const SeriesPolicy& policy) {
  if (m < 0) throw ArgumentError("elliptic_bernoulli: m must be >= 0");
  if (!std::isfinite(x) || !std::isfinite(y)) throw ArgumentError("elliptic_bernoulli: non-finite argument");
  const long cap = checked_term_cap(tau, policy);
  if (m == 0) return {1.0, 0.0};

  double yr = y - std::floor(y);
  if (yr >= 1.0) yr = 0.0;
  const double xr = x - std::round(x);
  if (yr == 0.0 && xr == 0.0)
    throw SingularityError("elliptic_bernoulli: x - y*tau = " + std::to_string(x) + " - " + std::to_string(y) +
                           "*tau is a lattice point");

  const cplx t = tau.tau();
  const cplx q = tau.nome();
  const double aq = std::abs(q);
  const cplx ex_minus = std::exp(cplx(0.0, -2.0 * kPi * xr));  // e(-x)
  const cplx ex_plus = std::conj(ex_minus);                    // e(x)

  // E_j = e((j - y) tau), F_j = e((j + y) tau), advanced by q each step.
  cplx ej = std::exp(kTwoPiI * (1.0 - yr) * t);
  cplx fj = std::exp(kTwoPiI * (1.0 + yr) * t);

  // y^{m-1} G / (G - 1) with G = e(-x + y tau); 0^0 = 1.
  cplx closing = 0.0;
  const double ypow = (m == 1) ? 1.0 : int_pow(yr, m - 1);
  if (ypow != 0.0) {
    const cplx w = kTwoPiI * (cplx(-xr, 0.0) + yr * t);
    const cplx gm1 = cexpm1(w);
    closing = ypow * (1.0 + 1.0 / gm1);
  }
  const double bm = bernoulli_polynomial_d(m, yr);
  detail::KahanSum acc;
  double tail = 0.0;
  for (long j = 1;; ++j) {
    const double jd = static_cast<double>(j);
    const cplx a = int_pow(yr - jd, m - 1) * ej / (ex_minus - ej);
    const cplx b = int_pow(yr + jd, m - 1) * fj / (ex_plus - fj);
    acc.add(a);
    acc.add(-b);
    ej *= q;
    fj *= q;
    // Remaining terms j' > j: |E_j'| <= |q|^{j'-y}, |F_j'| <= |q|^{j'+y} <= |q|^{j'-y}.
    const double lead = std::abs(ej);
    const double ratio = std::pow((jd + 3.0) / (jd + 2.0), m - 1) * aq;
    if (lead < 1.0 && ratio < 1.0) {
      tail = 2.0 * int_pow(jd + 2.0, m - 1) * lead / ((1.0 - lead) * (1.0 - ratio));
      if (m * tail <= policy.tol * (m * (acc.abs_sum() + std::abs(closing)) + std::abs(bm))) break;
    }
    if (j >= cap)
      throw ConvergenceError("elliptic_bernoulli did not converge within " + std::to_string(cap) + " terms",
                             ComplexVal(acc.value(), INFINITY));
  }

  const cplx value = static_cast<double>(m) * (acc.value() + closing) + bm;
  const double scale = m * (acc.abs_sum() + std::abs(closing)) + std::abs(bm);
  const double rounding = 16.0 * (m + 2) * kUnitRoundoff * scale;
  return {value, m * tail + rounding};
}

}  // namespace ellded
