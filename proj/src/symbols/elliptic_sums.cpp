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
#include <stdexcept>
#include <string>

#include "ellded/symbols.hpp"

namespace ellded {

std::string route_name(Route r) {
  return r == Route::zeta_derivative ? "zeta_derivative" : "bernoulli_product";
}

Route parse_route(const std::string& name) {
  if (name == "zeta_derivative") return Route::zeta_derivative;
  if (name == "bernoulli_product") return Route::bernoulli_product;
  throw std::invalid_argument("unknown route '" + name + "'");
}

namespace {

void require_n(int n) {
  if (n < 1) throw ArgumentError("n must be >= 1, got " + std::to_string(n));
}

long mod(long a, long m) {
  const long r = a % m;
  return r < 0 ? r + m : r;
}

long inverse_mod(long a, long m) {
  long old_r = mod(a, m), r = m, old_s = 1, s = 0;
  while (r != 0) {
    const long quot = old_r / r;
    long tmp = old_r - quot * r;
    old_r = r;
    r = tmp;
    tmp = old_s - quot * s;
    old_s = s;
    s = tmp;
  }
  return mod(old_s, m);
}

double dfactorial(int n) {
  double r = 1.0;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

cplx two_pi_i_pow(int e) {
  cplx r = 1.0;
  for (int i = 0; i < e; ++i) r *= kTwoPiI;
  return r;
}

ComplexVal sum_zeta_route(int n, long p, long q, const TauPoint& tau, const SeriesPolicy& policy) {
  const cplx t = tau.tau();
  const ComplexVal e2 = eisenstein(1, tau, policy);
  const double pd = static_cast<double>(p);
  const double qd = static_cast<double>(q);
  ComplexVal total;
  for (long lam = 0; lam < p; ++lam) {
    for (long mu = 0; mu < p; ++mu) {
      if (lam == 0 && mu == 0) continue;
      const cplx point = (static_cast<double>(lam) + static_cast<double>(mu) * t) / pd;
      const ComplexVal deriv = zeta_derivative(2 * n, point, tau, policy);
      const ComplexVal bracket = weierstrass_zeta(qd * point, tau, policy) - scale(qd * point, e2) +
                                 ComplexVal(kTwoPiI * qd * static_cast<double>(mu) / pd);
      total += deriv * bracket;
    }
  }
  return scale(1.0 / (kTwoPiI * kTwoPiI * pd * dfactorial(2 * n)), total);
}

ComplexVal sum_bernoulli_route(int n, long p, long q, const TauPoint& tau, const SeriesPolicy& policy) {
  const long qinv = inverse_mod(q, p);
  const double pd = static_cast<double>(p);
  ComplexVal total;
  for (long a = 0; a < p; ++a) {
    for (long b = 0; b < p; ++b) {
      if (a == 0 && b == 0) continue;
      const ComplexVal high =
          elliptic_bernoulli(2 * n + 1, static_cast<double>(mod(-a, p)) / pd, static_cast<double>(b) / pd, tau, policy);
      const ComplexVal low = elliptic_bernoulli(1, static_cast<double>(mod(-qinv * a, p)) / pd,
                                                static_cast<double>(mod(qinv * b, p)) / pd, tau, policy);
      total += high * low;
    }
  }
  const cplx pref = -two_pi_i_pow(2 * n) * std::pow(pd, 2 * n - 1) / dfactorial(2 * n + 1);
  return scale(pref, total);
}

}  // namespace

EllipticSumResult elliptic_apostol_sum(int n, const CoprimePair& pair, const TauPoint& tau, Route route,
                                       const SeriesPolicy& policy) {
  require_n(n);
  checked_term_cap(tau, policy);
  EllipticSumResult r;
  r.route = route;
  r.n = n;
  r.p = pair.p();
  r.q = pair.q();
  r.tau = tau.tau();
  if (pair.p() == 1) return r;
  r.value = route == Route::zeta_derivative ? sum_zeta_route(n, pair.p(), pair.q(), tau, policy)
                                            : sum_bernoulli_route(n, pair.p(), pair.q(), tau, policy);
  return r;
}

ComplexVal evaluate(const ErrLaurent& poly, long p, long q) {
  if (p == 0 || q == 0) throw ArgumentError("evaluate: p and q must be nonzero");
  ComplexVal total;
  for (const auto& [e, c] : poly) {
    const double mono = std::pow(static_cast<double>(p), e.first) * std::pow(static_cast<double>(q), e.second);
    total += scale(mono, c);
  }
  return total;
}

ErrLaurent reciprocity_polynomial(int n, const TauPoint& tau, const SeriesPolicy& policy) {
  require_n(n);
  std::vector<ComplexVal> e(n + 2);
  for (int j = 1; j <= n + 1; ++j) e[j] = eisenstein(j, tau, policy);
  const ComplexVal de = eisenstein_tau_derivative(n, tau, policy);
  const cplx inv = 1.0 / (kTwoPiI * kTwoPiI);

  ErrLaurent poly;
  auto add = [&poly](int i, int j, const ComplexVal& c) {
    auto [it, inserted] = poly.try_emplace(Exponent{i, j}, c);
    if (!inserted) it->second += c;
  };
  for (int j = 1; j <= n; ++j) add(2 * j - 1, 2 * n + 1 - 2 * j, scale(-inv, e[j] * e[n + 1 - j]));
  add(2 * n + 1, -1, scale(inv, e[n + 1]));
  add(-1, 2 * n + 1, scale(inv, e[n + 1]));
  add(-1, -1, scale(inv * static_cast<double>(2 * n + 1), e[n + 1]));
  const ComplexVal dterm = scale(-1.0 / (cplx(0.0, 4.0 * kPi) * static_cast<double>(n)), de);
  add(2 * n - 1, 1, dterm);
  add(1, 2 * n - 1, dterm);
  return poly;
}

ComplexVal reciprocity_rhs(int n, const CoprimePair& pair, const TauPoint& tau, const SeriesPolicy& policy) {
  pair.require_u();
  return evaluate(reciprocity_polynomial(n, tau, policy), pair.p(), pair.q());
}

ComplexVal reciprocity_constant(const CoprimePair& pair, const TauPoint& tau, const SeriesPolicy& policy) {
  const double pq = static_cast<double>(pair.p()) * static_cast<double>(pair.q());
  return scale(-1.0 / (kTwoPiI * kTwoPiI * pq), eisenstein(1, tau, policy));
}

}  // namespace ellded
