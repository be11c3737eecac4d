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

ComplexVal operator+(const ComplexVal& a, const ComplexVal& b) {
  const cplx v = a.value + b.value;
  return {v, a.err + b.err + kUnitRoundoff * std::abs(v)};
}

ComplexVal operator-(const ComplexVal& a, const ComplexVal& b) {
  const cplx v = a.value - b.value;
  return {v, a.err + b.err + kUnitRoundoff * std::abs(v)};
}

ComplexVal operator*(const ComplexVal& a, const ComplexVal& b) {
  const cplx v = a.value * b.value;
  const double e = std::abs(a.value) * b.err + std::abs(b.value) * a.err + a.err * b.err +
                   4.0 * kUnitRoundoff * std::abs(a.value) * std::abs(b.value);
  return {v, e};
}

ComplexVal operator/(const ComplexVal& a, const ComplexVal& b) {
  const double bm = std::abs(b.value);
  const cplx v = a.value / b.value;
  if (b.err >= bm) return {v, INFINITY};
  const double e = (a.err + std::abs(v) * b.err) / (bm - b.err) + 4.0 * kUnitRoundoff * std::abs(v);
  return {v, e};
}

ComplexVal scale(cplx s, const ComplexVal& v) {
  const cplx r = s * v.value;
  return {r, std::abs(s) * v.err + 2.0 * kUnitRoundoff * std::abs(r)};
}

}  // namespace ellded
