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

#include "ellded/qseries.hpp"

namespace ellded {

double zeta_odd(int n, double tol) {
  if (n < 1) throw ArgumentError("zeta_odd: n must be >= 1");
  if (!(tol > 0.0)) throw ArgumentError("zeta_odd: tol must be positive");
  const double s = 2.0 * n + 1.0;
  // Euler-Maclaurin through the f' term; the first omitted term is
  // s(s+1)(s+2) N^{-s-3} / 720.
  double nn = std::ceil(std::pow(s * (s + 1) * (s + 2) / (720.0 * tol), 1.0 / (s + 3)));
  nn = std::max(nn, 10.0);
  const long big_n = static_cast<long>(nn);
  double sum = 0.0, comp = 0.0;
  for (long k = big_n - 1; k >= 1; --k) {
    const double term = std::pow(static_cast<double>(k), -s);
    const double y = term - comp;
    const double tmp = sum + y;
    comp = (tmp - sum) - y;
    sum = tmp;
  }
  const double tail = std::pow(nn, 1.0 - s) / (s - 1.0) + 0.5 * std::pow(nn, -s) + s * std::pow(nn, -s - 1.0) / 12.0;
  return sum + tail;
}

}  // namespace ellded
