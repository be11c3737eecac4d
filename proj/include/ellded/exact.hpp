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

#include "ellded/errors.hpp"
#include "ellded/laurent.hpp"
#include "ellded/rational.hpp"

namespace ellded {

/// A pair (p, q) with p >= 1 and gcd(p, q) = 1, i.e. an element of V.
/// Construction throws CoprimalityError otherwise.
class CoprimePair {
 public:
  CoprimePair(long p, long q);

  long p() const { return p_; }
  long q() const { return q_; }
  /// Membership in U additionally needs q >= 1.
  bool in_u() const { return q_ >= 1; }
  /// Throws CoprimalityError unless in_u().
  const CoprimePair& require_u() const;

  CoprimePair swapped() const { return CoprimePair(q_, p_); }

  friend bool operator==(const CoprimePair&, const CoprimePair&) = default;

 private:
  long p_;
  long q_;
};

/// B_k with B_1 = -1/2. Memoized; safe to call from several threads.
Rational bernoulli_number(int k);

/// B_k(x).
Rational bernoulli_polynomial(int k, const Rational& x);

/// Periodic Bernoulli function: B_k({x}), with the Fourier-series value 0
/// for k = 1 at integers.
Rational bernoulli_function(int k, const Rational& x);

/// s_k(q, p) = sum_{mu=1}^{p-1} (mu/p) B-bar_k(mu q / p), by direct summation.
Rational apostol_sum(int k, long q, long p);

/// The Laurent polynomial g_w, including the p^-1 q^-1 term.
RationalLaurent g_poly(int w);

/// p^w s_{w+1}(q,p) + q^w s_{w+1}(p,q) + 2(w+1) g_w(p,q); exactly zero when
/// the reciprocity law holds. Requires w even >= 2 and the pair in U.
Rational verify_apostol_reciprocity(int w, const CoprimePair& pair);

struct DimData {
  int d = 0;       // dim S_{w+2}
  int dim_m = 0;   // dim M_{w+2} = d + 1
};

DimData dim_data(int w);

/// Throws ArgumentError unless w is even and >= 2.
void require_even_weight(int w);

}  // namespace ellded
