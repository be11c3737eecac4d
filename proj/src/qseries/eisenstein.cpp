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
#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <string>
#include <vector>

#include "ellded/exact.hpp"
#include "ellded/qseries.hpp"
#include "summation.hpp"

namespace ellded {

namespace {

using SigmaTable = std::vector<double>;  // index k -> sigma_m(k), entry 0 unused

std::shared_mutex g_sigma_mutex;
std::map<int, std::shared_ptr<const SigmaTable>> g_sigma;

std::shared_ptr<const SigmaTable> sigma_table(int m, long min_size) {
  {
    std::shared_lock lock(g_sigma_mutex);
    auto it = g_sigma.find(m);
    if (it != g_sigma.end() && static_cast<long>(it->second->size()) > min_size) return it->second;
  }
  std::unique_lock lock(g_sigma_mutex);
  auto& slot = g_sigma[m];
  if (slot && static_cast<long>(slot->size()) > min_size) return slot;
  long size = slot ? static_cast<long>(slot->size()) : 64;
  while (size <= min_size) size *= 2;
  auto table = std::make_shared<SigmaTable>(size, 0.0);
  for (long d = 1; d < size; ++d) {
    const double dm = std::pow(static_cast<double>(d), m);
    for (long k = d; k < size; k += d) (*table)[k] += dm;
  }
  slot = table;
  return slot;
}

struct DivisorSeries {
  cplx sum;
  double weighted_abs = 0.0;  // sum of (k+1)|term_k|
  double tail = 0.0;
};

// sum_{k>=1} k^d sigma_m(k) q^k. `floor_scale` is the magnitude of whatever
// constant the caller adds (in units of this series), so the relative
// stopping rule sees the full value.
DivisorSeries divisor_series(int m, int d, const TauPoint& tau, const SeriesPolicy& policy, double floor_scale) {
  const long cap = checked_term_cap(tau, policy);
  const cplx q = tau.nome();
  const double aq = std::abs(q);
  const double log_aq = std::log(aq);
  const int growth = m + 1 + d;  // k^d sigma_m(k) <= k^growth
  detail::KahanSum acc;
  DivisorSeries out;
  auto sig = sigma_table(m, 64);
  cplx qk = 1.0;
  for (long k = 1;; ++k) {
    if (k >= static_cast<long>(sig->size())) sig = sigma_table(m, k);
    qk *= q;
    const cplx term = (*sig)[k] * std::pow(static_cast<double>(k), d) * qk;
    acc.add(term);
    out.weighted_abs += static_cast<double>(k + 1) * std::abs(term);
    const double kk = static_cast<double>(k);
    const double ratio = std::pow((kk + 2.0) / (kk + 1.0), growth) * aq;
    if (ratio < 1.0) {
      const double tail = (aq == 0.0) ? 0.0 : std::exp(growth * std::log(kk + 1.0) + (kk + 1.0) * log_aq) / (1.0 - ratio);
      if (tail <= policy.tol * (floor_scale + acc.abs_sum())) {
        out.tail = tail;
        break;
      }
    }
    if (k >= cap) {
      out.sum = acc.value();
      throw ConvergenceError("divisor series did not converge within " + std::to_string(cap) + " terms",
                             ComplexVal(out.sum, INFINITY));
    }
  }
  out.sum = acc.value();
  return out;
}

void require_positive_n(int n) {
  if (n < 1) throw ArgumentError("Eisenstein index n must be >= 1, got " + std::to_string(n));
}

// (2 pi)^{2n} (-1)^n, i.e. (2 pi i)^{2n}.
double two_pi_i_even_power(int n) {
  const double v = std::pow(2.0 * kPi, 2 * n);
  return (n % 2 == 0) ? v : -v;
}

}  // namespace

ComplexVal eisenstein(int n, const TauPoint& tau, const SeriesPolicy& policy) {
  require_positive_n(n);
  const double pw = two_pi_i_even_power(n);
  const double c0 = -pw * (bernoulli_number(2 * n) / factorial(2 * n)).to_double();
  const double factor = 2.0 * pw / factorial(2 * n - 1).to_double();
  const double af = std::abs(factor);
  const DivisorSeries s = divisor_series(2 * n - 1, 0, tau, policy, std::abs(c0) / af);
  const cplx value = c0 + factor * s.sum;
  const double rounding = (2 * n + 8) * kUnitRoundoff * (std::abs(c0) + af * s.weighted_abs);
  return {value, af * s.tail + rounding};
}

ComplexVal eisenstein_normalized(int n, const TauPoint& tau, const SeriesPolicy& policy) {
  require_positive_n(n);
  const double c0 = -(bernoulli_number(2 * n) / Rational(4 * n)).to_double();
  const DivisorSeries s = divisor_series(2 * n - 1, 0, tau, policy, std::abs(c0));
  const cplx value = c0 + s.sum;
  const double rounding = 8.0 * kUnitRoundoff * (std::abs(c0) + s.weighted_abs);
  return {value, s.tail + rounding};
}

ComplexVal eisenstein_tau_derivative(int n, const TauPoint& tau, const SeriesPolicy& policy) {
  require_positive_n(n);
  const double factor = 2.0 * two_pi_i_even_power(n) / factorial(2 * n - 1).to_double();
  const DivisorSeries s = divisor_series(2 * n - 1, 1, tau, policy, 0.0);
  const cplx f = factor * kTwoPiI;
  const double af = std::abs(f);
  const double rounding = (2 * n + 8) * kUnitRoundoff * af * s.weighted_abs;
  return {f * s.sum, af * s.tail + rounding};
}

}  // namespace ellded
