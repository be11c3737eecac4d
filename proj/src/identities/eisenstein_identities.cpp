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

#include "ellded/identities.hpp"

namespace ellded {

CoefficientVector c_coefficients(int n, const TauPoint& tau, const SeriesPolicy& policy) {
  if (n < 1) throw ArgumentError("c_coefficients: n must be >= 1");
  std::vector<ComplexVal> e(n + 2);
  for (int j = 1; j <= n + 1; ++j) e[j] = eisenstein(j, tau, policy);
  const ComplexVal de = eisenstein_tau_derivative(n, tau, policy);
  const cplx shift = cplx(0.0, kPi) / static_cast<double>(n);

  CoefficientVector out;
  out.n = n;
  out.c.resize(n + 2);
  out.magnitude.resize(n + 2);
  out.c[0] = e[n + 1];
  out.c[n + 1] = e[n + 1];
  out.magnitude[0] = out.magnitude[n + 1] = e[n + 1].abs();
  for (int j = 1; j <= n; ++j) {
    ComplexVal c = -(e[j] * e[n + 1 - j]);
    // The derivative term sits on p^2 q^{2n} and p^{2n} q^2; for n = 1 both
    // are the same monomial and it appears twice.
    const int mult = (j == 1 ? 1 : 0) + (j == n ? 1 : 0);
    out.magnitude[j] = e[j].abs() * e[n + 1 - j].abs();
    if (mult > 0) {
      c -= scale(shift * static_cast<double>(mult), de);
      out.magnitude[j] += std::abs(shift) * mult * de.abs();
    }
    out.c[j] = c;
  }
  return out;
}

Residual binomial_identity_residual(int n, int k, const TauPoint& tau, const SeriesPolicy& policy) {
  if (k < 1 || k > 2 * n + 2)
    throw ArgumentError("binomial_identity_residual: k must lie in [1, 2n+2], got " + std::to_string(k));
  const CoefficientVector cv = c_coefficients(n, tau, policy);
  Residual r;
  ComplexVal acc;
  auto add = [&](double weight, int i) {
    if (weight == 0.0) return;
    acc += scale(weight, cv.c[i]);
    r.scale += std::abs(weight) * cv.magnitude[i];
  };
  for (int i = 0; i <= n + 1; ++i) {
    if (2 * i >= k - 1) add(binomial(2 * i, k - 1).to_double(), i);
    if (2 * i <= k) add(binomial(2 * n + 2 - 2 * i, 2 * n + 2 - k).to_double(), i);
  }
  add(-1.0, (k % 2 == 1) ? (k - 1) / 2 : k / 2);
  r.residual = acc;
  return r;
}

ComplexVal t_value(int n, long p, long q, const TauPoint& tau, const SeriesPolicy& policy) {
  const ErrLaurent poly = reciprocity_polynomial(n, tau, policy);
  const double pq = static_cast<double>(p) * static_cast<double>(q);
  return scale(kTwoPiI * kTwoPiI * pq, evaluate(poly, p, q)) -
         scale(static_cast<double>(2 * n + 1), eisenstein(n + 1, tau, policy));
}

Residual three_term_residual(int n, const CoprimePair& pair, const TauPoint& tau, const SeriesPolicy& policy) {
  pair.require_u();
  const long p = pair.p();
  const long q = pair.q();
  const ComplexVal a = scale(static_cast<double>(p), t_value(n, p + q, q, tau, policy));
  const ComplexVal b = scale(static_cast<double>(q), t_value(n, p, p + q, tau, policy));
  const ComplexVal c = scale(static_cast<double>(p + q), t_value(n, p, q, tau, policy));
  return {a + b - c, a.abs() + b.abs() + c.abs()};
}

Residual unweighted_three_term_residual(int n, const CoprimePair& pair, const TauPoint& tau,
                                        const SeriesPolicy& policy) {
  pair.require_u();
  const long p = pair.p();
  const long q = pair.q();
  auto s_value = [&](long a, long b) {
    const double ab = static_cast<double>(a) * static_cast<double>(b);
    return scale(1.0 / (kTwoPiI * kTwoPiI * ab), t_value(n, a, b, tau, policy));
  };
  const ComplexVal x = s_value(p + q, q);
  const ComplexVal y = s_value(p, p + q);
  const ComplexVal z = s_value(p, q);
  return {x + y - z, x.abs() + y.abs() + z.abs()};
}

}  // namespace ellded
