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

#include "ellded/qseries.hpp"
#include "summation.hpp"

namespace ellded {

namespace {

double segment_distance(cplx a, cplx b) {
  const cplx d = b - a;
  double t = -(a.real() * d.real() + a.imag() * d.imag()) / std::norm(d);
  t = std::clamp(t, 0.0, 1.0);
  return std::abs(a + t * d);
}

}  // namespace

ComplexVal kronecker_direct(int k, cplx z, const TauPoint& tau, const LatticeCutoff& cutoff) {
  if (k < 3) throw ArgumentError("kronecker_direct: k must be >= 3 (smaller k is only conditionally convergent)");
  const cplx t = tau.tau();
  const double im = t.imag();
  const int r = cutoff.radius;
  const cplx zc = std::conj(z);
  detail::KahanSum acc;
  for (int m = -r; m <= r; ++m) {
    for (int n = -r; n <= r; ++n) {
      if (m == 0 && n == 0) continue;
      const cplx w = static_cast<double>(m) * t + static_cast<double>(n);
      const double phase = 2.0 * kPi * (w * zc).imag() / im;
      cplx wk = w;
      for (int i = 1; i < k; ++i) wk *= w;
      acc.add(std::polar(1.0, phase) / wk);
    }
  }

  // Every w with max(|m|,|n|) > R has |w| >= c (R+1), c the distance from 0
  // to the boundary of the unit parallelogram; compare with the integral of
  // |x|^{-k} over the cells.
  const double c = std::min(segment_distance(t - 1.0, t + 1.0), segment_distance(1.0 - t, 1.0 + t));
  const double diam = std::max(std::abs(1.0 + t), std::abs(1.0 - t));
  const double rho = c * (r + 1);
  double tail = INFINITY;
  if (rho > diam / 2.0)
    tail = std::pow(1.0 + diam / (2.0 * rho), k) * 2.0 * kPi * std::pow(rho - diam / 2.0, 2 - k) / (im * (k - 2));
  const double rounding = (k + 8) * kUnitRoundoff * acc.abs_sum();
  return {acc.value(), tail + rounding};
}

}  // namespace ellded
