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
#include <numeric>
#include <string>

#include "ellded/symbols.hpp"

namespace ellded {

namespace {

void check_gap(double value, long g, const char* label) {
  const double v = value / static_cast<double>(g);
  if (std::abs(v - std::round(v)) < 1e-9)
    throw ArgumentError(std::string("MachideSpec: ") + label + " lies in gcd * Z (degenerate parameters)");
}

}  // namespace

void MachideSpec::validate() const {
  for (const auto* v : {&a, &b, &c})
    if (v->first < 1 || v->second < 1) throw ArgumentError("MachideSpec: a, b, c entries must be positive");
  if (m < 0 || n < 0) throw ArgumentError("MachideSpec: m, n must be >= 0");
  check_gap(a.first * z.first - c.first * x.first, std::gcd(a.first, c.first), "a'z' - c'x'");
  check_gap(b.first * z.first - c.first * y.first, std::gcd(b.first, c.first), "b'z' - c'y'");
}

MachideSpec MachideSpec::rotated() const {
  MachideSpec r = *this;
  r.a = b;
  r.b = c;
  r.c = a;
  r.x = y;
  r.y = z;
  r.z = x;
  return r;
}

ComplexVal machide_sum(const MachideSpec& spec, const TauPoint& tau, const SeriesPolicy& policy) {
  spec.validate();
  const auto [a1, a0] = spec.a;
  const auto [b1, b0] = spec.b;
  const auto [c1, c0] = spec.c;
  const auto [x1, x0] = spec.x;
  const auto [y1, y0] = spec.y;
  const auto [z1, z0] = spec.z;
  const TauPoint tau_a = tau.scaled(static_cast<double>(a1) / static_cast<double>(a0));
  const TauPoint tau_b = tau.scaled(static_cast<double>(b1) / static_cast<double>(b0));
  ComplexVal total;
  for (long j = 0; j < c0; ++j) {
    const double unprimed = (static_cast<double>(j) + z0) / static_cast<double>(c0);
    for (long jp = 0; jp < c1; ++jp) {
      const double primed = (static_cast<double>(jp) + z1) / static_cast<double>(c1);
      const ComplexVal first = elliptic_bernoulli(spec.m, a1 * primed - x1, a0 * unprimed - x0, tau_a, policy);
      const ComplexVal second = elliptic_bernoulli(spec.n, b1 * primed - y1, b0 * unprimed - y0, tau_b, policy);
      total += first * second;
    }
  }
  return scale(1.0 / static_cast<double>(c1), total);
}

MachideCombinations machide_combinations(const CoprimePair& pair, double s, double t, const TauPoint& tau,
                                         const SeriesPolicy& policy) {
  pair.require_u();
  const long p = pair.p();
  const long q = pair.q();
  MachideSpec abc;
  abc.a = {1, 1};
  abc.b = {p, p};
  abc.c = {q, q};
  abc.x = {s, 0.0};
  abc.y = {static_cast<double>(p) * t, 0.0};
  abc.z = {-static_cast<double>(q) * t, 0.0};
  const MachideSpec bca = abc.rotated();
  const MachideSpec cab = bca.rotated();

  auto sum = [&](MachideSpec spec, int m, int n) {
    spec.m = m;
    spec.n = n;
    return machide_sum(spec, tau, policy);
  };
  const double a = 1.0;
  const double b = static_cast<double>(p);
  const double c = static_cast<double>(q);

  MachideCombinations out;
  out.first = scale(-c / (2 * b), sum(bca, 2, 0)) + scale(c / (2 * a), sum(cab, 0, 2));
  out.second = scale(b / (2 * a), sum(abc, 2, 0)) - scale(b / (2 * c), sum(bca, 0, 2));
  out.third = scale(a / (2 * b), sum(abc, 0, 2)) - sum(abc, 1, 1) + scale(b / (2 * a), sum(abc, 2, 0)) -
              sum(bca, 1, 1) - scale(c / (2 * b), sum(bca, 2, 0)) + scale(c / a, sum(cab, 0, 2)) - sum(cab, 1, 1);
  return out;
}

}  // namespace ellded
