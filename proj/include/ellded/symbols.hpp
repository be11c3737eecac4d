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

#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ellded/exact.hpp"
#include "ellded/qseries.hpp"

namespace ellded {

enum class Route { zeta_derivative, bernoulli_product };

std::string route_name(Route r);
/// Accepts "zeta_derivative" / "bernoulli_product"; throws std::invalid_argument.
Route parse_route(const std::string& name);

struct EllipticSumResult {
  ComplexVal value;
  Route route = Route::zeta_derivative;
  int n = 0;
  long p = 0;
  long q = 0;
  cplx tau;
};

/// D^-_{2n}(p, q; tau), the sum over nonzero p-division points of
/// zeta^{(2n)}(P) [zeta(qP) - E_2 qP + 2 pi i q mu / p].
EllipticSumResult elliptic_apostol_sum(int n, const CoprimePair& pair, const TauPoint& tau,
                                       Route route = Route::zeta_derivative, const SeriesPolicy& policy = {});

/// Laurent polynomial in (p, q) whose coefficients carry error bounds.
using ErrLaurent = std::map<Exponent, ComplexVal>;

/// Evaluate an ErrLaurent at integers (p, q).
ComplexVal evaluate(const ErrLaurent& poly, long p, long q);

/// R^-_{2n}(p, q; tau) as a polynomial in p, q with Eisenstein coefficients.
ErrLaurent reciprocity_polynomial(int n, const TauPoint& tau, const SeriesPolicy& policy = {});

/// R^-_{2n}(p, q; tau), closed form in Eisenstein series.
ComplexVal reciprocity_rhs(int n, const CoprimePair& pair, const TauPoint& tau, const SeriesPolicy& policy = {});

/// Generating function D^-(p, q; tau; x) = sum_n D^-_{2n} x^{2n} + (odd part).
/// Requires 0 < |x| < 1/(2p) or x = 0.
ComplexVal generating_D(const CoprimePair& pair, const TauPoint& tau, double x, const SeriesPolicy& policy = {});

/// Generating function R^-(p, q; tau; x). Requires 0 < |x| < 1/(2 max(p, q)).
ComplexVal generating_R(const CoprimePair& pair, const TauPoint& tau, double x, const SeriesPolicy& policy = {});

/// -E_2(tau) / ((2 pi i)^2 p q), the constant of the generating-function
/// reciprocity law.
ComplexVal reciprocity_constant(const CoprimePair& pair, const TauPoint& tau, const SeriesPolicy& policy = {});

/// Even Taylor coefficients a_0, a_2, ..., a_{2(count-1)} of an even function
/// sampled at x = h, 2h, ..., samples*h, by polynomial extrapolation in x^2.
std::vector<cplx> even_taylor_coefficients(const std::function<cplx(double)>& f, int count, double h = 1e-2,
                                           int samples = 7);

/// Parameters of S_{m,n}: each pair is (primed, unprimed).
struct MachideSpec {
  std::pair<long, long> a{1, 1}, b{1, 1}, c{1, 1};
  std::pair<double, double> x{0, 0}, y{0, 0}, z{0, 0};
  int m = 0;
  int n = 0;

  /// Throws ArgumentError unless all of a, b, c are positive and
  /// a'z' - c'x', b'z' - c'y' stay at least 1e-9 away from gcd(.,.) Z.
  void validate() const;
  /// (a, b, c; x, y, z) -> (b, c, a; y, z, x).
  MachideSpec rotated() const;
};

ComplexVal machide_sum(const MachideSpec& spec, const TauPoint& tau, const SeriesPolicy& policy = {});

/// The three Machide-sum combinations that vanish under the substitution
/// a = (1,1), b = (p,p), c = (q,q), x = (s,0), y = (pt,0), z = (-qt,0).
struct MachideCombinations {
  ComplexVal first;   // -(c/2b) S20(bca) + (c/2a) S02(cab)
  ComplexVal second;  // (b/2a) S20(abc) - (b/2c) S02(bca)
  ComplexVal third;   // seven-term combination
};

MachideCombinations machide_combinations(const CoprimePair& pair, double s, double t, const TauPoint& tau,
                                         const SeriesPolicy& policy = {});

/// The B_1 double sums over p- and q-division points, minus the
/// s-dependent terms on the other side; independent of s.
ComplexVal b1_sum_residual(const CoprimePair& pair, double s, const TauPoint& tau, const SeriesPolicy& policy = {});

/// (1/2pq) sum over (l, m) mod q of B_2(pl/q, pm/q; tau), with the (0,0)
/// class taken as the regular value E_2/(2 pi^2).
ComplexVal b2_class_sum(const CoprimePair& pair, const TauPoint& tau, const SeriesPolicy& policy = {});

}  // namespace ellded
