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

#include <mutex>
#include <vector>

#include "ellded/exact.hpp"

namespace ellded {

namespace {

std::mutex g_bernoulli_mutex;
std::vector<Rational> g_bernoulli{Rational(1)};

}  // namespace

Rational bernoulli_number(int k) {
  if (k < 0) throw ArgumentError("bernoulli_number: k must be >= 0");
  std::lock_guard lock(g_bernoulli_mutex);
  // sum_{j<=n} C(n+1, j) B_j = 0
  while (static_cast<int>(g_bernoulli.size()) <= k) {
    const int n = static_cast<int>(g_bernoulli.size());
    Rational s;
    if (n >= 3 && n % 2 == 1) {
      g_bernoulli.emplace_back(0);
      continue;
    }
    for (int j = 0; j < n; ++j) s += binomial(n + 1, j) * g_bernoulli[j];
    g_bernoulli.push_back(-s / Rational(n + 1));
  }
  return g_bernoulli[k];
}

Rational bernoulli_polynomial(int k, const Rational& x) {
  if (k < 0) throw ArgumentError("bernoulli_polynomial: k must be >= 0");
  // Horner in x over the coefficients C(k, j) B_{k-j}.
  Rational acc;
  for (int j = k; j >= 0; --j) acc = acc * x + binomial(k, j) * bernoulli_number(k - j);
  return acc;
}

Rational bernoulli_function(int k, const Rational& x) {
  if (k < 1) throw ArgumentError("bernoulli_function: k must be >= 1");
  Rational f = x.frac();
  if (k == 1 && f.is_zero()) return Rational(0);
  return bernoulli_polynomial(k, f);
}

}  // namespace ellded
