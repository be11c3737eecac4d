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

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "ellded/symbols.hpp"

namespace ellded {

namespace {

void require_small(double x, long bound_den, const char* what) {
  if (!std::isfinite(x) || !(std::abs(x) < 0.5 / static_cast<double>(bound_den)))
    throw ArgumentError(std::string(what) + ": |x| must be below 1/(2*" + std::to_string(bound_den) + ")");
}

}  // namespace

ComplexVal generating_D(const CoprimePair& pair, const TauPoint& tau, double x, const SeriesPolicy& policy) {
  const long p = pair.p();
  require_small(x, p, "generating_D");
  checked_term_cap(tau, policy);
  if (p == 1) return {};
  const double pd = static_cast<double>(p);
  const double qd = static_cast<double>(pair.q());
  const cplx t = tau.tau();
  const ComplexVal e2 = eisenstein(1, tau, policy);
  ComplexVal total;
  for (long lam = 0; lam < p; ++lam) {
    for (long mu = 0; mu < p; ++mu) {
      if (lam == 0 && mu == 0) continue;
      const cplx point = (static_cast<double>(lam) + static_cast<double>(mu) * t) / pd;
      const cplx shift = kTwoPiI * static_cast<double>(mu) / pd;
      const ComplexVal first =
          weierstrass_zeta(point - x, tau, policy) - scale(point - x, e2) + ComplexVal(shift);
      const ComplexVal second = weierstrass_zeta(qd * point, tau, policy) - scale(qd * point, e2) + ComplexVal(qd * shift);
      total += first * second;
    }
  }
  return scale(1.0 / (kTwoPiI * kTwoPiI * pd), total);
}

ComplexVal generating_R(const CoprimePair& pair, const TauPoint& tau, double x, const SeriesPolicy& policy) {
  pair.require_u();
  const long p = pair.p();
  const long q = pair.q();
  require_small(x, std::max(p, q), "generating_R");
  if (x == 0.0) throw SingularityError("generating_R: x = 0 is a pole");
  const double pd = static_cast<double>(p);
  const double qd = static_cast<double>(q);
  const ComplexVal e2 = eisenstein(1, tau, policy);
  const ComplexVal de2 = eisenstein_tau_derivative(1, tau, policy);
  const cplx inv = 1.0 / (kTwoPiI * kTwoPiI);

  auto zeta_block = [&](double a) {
    const cplx z(a * x, 0.0);
    return weierstrass_zeta(z, tau, policy) - scale(z, e2);
  };
  auto sigma_block = [&](double a) {
    const cplx z(a * x, 0.0);
    return scale(2.0, log_sigma_tau_derivative(z, tau, policy)) - scale(z * z, de2) -
           scale(1.0 / cplx(0.0, kPi), e2);
  };

  const ComplexVal t1 = scale(-inv, zeta_block(pd) * zeta_block(qd));
  const ComplexVal t2 = scale(qd / (cplx(0.0, 4.0 * kPi) * pd), sigma_block(pd));
  const ComplexVal t3 = scale(pd / (cplx(0.0, 4.0 * kPi) * qd), sigma_block(qd));
  const ComplexVal t4 = scale(inv / (pd * qd), weierstrass_p_deriv(0, cplx(x, 0.0), tau, policy) + e2);
  return t1 + t2 + t3 + t4;
}

std::vector<cplx> even_taylor_coefficients(const std::function<cplx(double)>& f, int count, double h, int samples) {
  if (count < 1 || samples < count) throw ArgumentError("even_taylor_coefficients: need samples >= count >= 1");
  // Newton interpolation in X = x^2 through (X_i, f(x_i)), then expand.
  std::vector<double> xs(samples);
  std::vector<cplx> dd(samples);
  for (int i = 0; i < samples; ++i) {
    const double x = h * (i + 1);
    xs[i] = x * x;
    dd[i] = f(x);
  }
  for (int level = 1; level < samples; ++level)
    for (int i = samples - 1; i >= level; --i) dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - level]);
  std::vector<cplx> coeff(samples, 0.0);
  for (int i = samples - 1; i >= 0; --i) {
    // coeff <- coeff * (X - xs[i]) + dd[i]
    for (int d = samples - 1; d >= 1; --d) coeff[d] = coeff[d - 1] - xs[i] * coeff[d];
    coeff[0] = -xs[i] * coeff[0] + dd[i];
  }
  coeff.resize(count);
  return coeff;
}

ComplexVal b1_sum_residual(const CoprimePair& pair, double s, const TauPoint& tau, const SeriesPolicy& policy) {
  pair.require_u();
  const long p = pair.p();
  const long q = pair.q();
  require_small(s, std::max(p, q), "b1_sum_residual");
  if (s == 0.0) throw SingularityError("b1_sum_residual: s = 0 is a pole");
  const double pd = static_cast<double>(p);
  const double qd = static_cast<double>(q);

  auto division_sum = [&](long n, long other) {
    const double nd = static_cast<double>(n);
    ComplexVal acc;
    for (long lam = 0; lam < n; ++lam) {
      for (long mu = 0; mu < n; ++mu) {
        if (lam == 0 && mu == 0) continue;
        const ComplexVal a = elliptic_bernoulli(1, static_cast<double>(lam) / nd - s, static_cast<double>(mu) / nd, tau, policy);
        const ComplexVal b = elliptic_bernoulli(1, static_cast<double>((other * lam) % n) / nd,
                                                static_cast<double>((other * mu) % n) / nd, tau, policy);
        acc += a * b;
      }
    }
    return scale(1.0 / nd, acc);
  };
  const ComplexVal lhs = division_sum(p, q) + division_sum(q, p);

  const ComplexVal e2 = eisenstein(1, tau, policy);
  const ComplexVal b1p = elliptic_bernoulli(1, pd * s, 0.0, tau, policy);
  const ComplexVal b1q = elliptic_bernoulli(1, qd * s, 0.0, tau, policy);
  const ComplexVal b2p = elliptic_bernoulli(2, pd * s, 0.0, tau, policy);
  const ComplexVal b2q = elliptic_bernoulli(2, qd * s, 0.0, tau, policy);
  const ComplexVal wp = weierstrass_p_deriv(0, cplx(s, 0.0), tau, policy);
  const ComplexVal rhs = -(b1p * b1q) + scale(qd / (2.0 * pd), b2p) + scale(pd / (2.0 * qd), b2q) +
                         scale(1.0 / (kTwoPiI * kTwoPiI * pd * qd), wp + e2);
  return lhs - rhs;
}

ComplexVal b2_class_sum(const CoprimePair& pair, const TauPoint& tau, const SeriesPolicy& policy) {
  pair.require_u();
  const long p = pair.p();
  const long q = pair.q();
  const double qd = static_cast<double>(q);
  const ComplexVal e2 = eisenstein(1, tau, policy);
  ComplexVal acc = scale(1.0 / (2.0 * kPi * kPi), e2);
  for (long lam = 0; lam < q; ++lam) {
    for (long mu = 0; mu < q; ++mu) {
      if (lam == 0 && mu == 0) continue;
      acc += elliptic_bernoulli(2, static_cast<double>((p * lam) % q) / qd, static_cast<double>((p * mu) % q) / qd,
                                tau, policy);
    }
  }
  return scale(1.0 / (2.0 * static_cast<double>(p) * qd), acc);
}

}  // namespace ellded
