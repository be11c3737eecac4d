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

#pragma once

#include <cmath>
#include <complex>

namespace ellded::detail {

/// Compensated complex accumulator that also tracks sum |term|, which feeds
/// the rounding part of the error estimate.
class KahanSum {
 public:
  void add(std::complex<double> term) {
    add_real(term.real(), re_, re_c_);
    add_real(term.imag(), im_, im_c_);
    abs_ += std::abs(term);
  }

  std::complex<double> value() const { return {re_ + re_c_, im_ + im_c_}; }
  double abs_sum() const { return abs_; }

 private:
  // Neumaier's variant: handles terms larger than the running sum.
  static void add_real(double x, double& sum, double& comp) {
    const double t = sum + x;
    if (std::abs(sum) >= std::abs(x))
      comp += (sum - t) + x;
    else
      comp += (x - t) + sum;
    sum = t;
  }

  double re_ = 0.0, im_ = 0.0;
  double re_c_ = 0.0, im_c_ = 0.0;
  double abs_ = 0.0;
};

}  // namespace ellded::detail
