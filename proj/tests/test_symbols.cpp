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

#include <doctest.h>

#include <cmath>
#include <numeric>
#include <random>
#include <vector>

#include "ellded/exact.hpp"
#include "ellded/symbols.hpp"

using namespace ellded;

namespace {

const TauPoint kI(cplx(0.0, 1.0));

double dist(cplx a, cplx b) { return std::abs(a - b); }

cplx two_pi_i_pow(int e) {
  cplx r = 1.0;
  for (int i = 0; i < e; ++i) r *= kTwoPiI;
  return r;
}

// -(2 pi i)^{2n} / (2n+1)! * p^{2n} * s_{2n+1}(q, p), evaluated from exact rationals.
cplx apostol_limit(int n, long p, long q) {
  const Rational exact = Rational(p).pow(2 * n) * apostol_sum(2 * n + 1, q, p) / factorial(2 * n + 1);
  return -two_pi_i_pow(2 * n) * exact.to_double();
}

struct Sample {
  int n;
  long p, q;
  TauPoint tau;
};

std::vector<Sample> random_samples(int count, std::uint64_t seed, bool need_u) {
  std::mt19937_64 gen(seed);
  const std::vector<TauPoint> taus{kI, TauPoint(cplx(0.3, 1.1)), TauPoint(cplx(0.0, 1.4))};
  std::vector<Sample> out;
  while (static_cast<int>(out.size()) < count) {
    const int n = 1 + static_cast<int>(gen() % 3);
    const long p = 1 + static_cast<long>(gen() % 12);
    const long q = need_u ? 1 + static_cast<long>(gen() % 12) : static_cast<long>(gen() % 25) - 12;
    if (std::gcd(p, q) != 1) continue;
    out.push_back({n, p, q, taus[gen() % taus.size()]});
  }
  return out;
}

}  // namespace

TEST_CASE("route names round-trip") {
  CHECK(parse_route(route_name(Route::zeta_derivative)) == Route::zeta_derivative);
  CHECK(parse_route("bernoulli_product") == Route::bernoulli_product);
  CHECK_THROWS_AS(parse_route("lattice"), std::invalid_argument);
}

TEST_CASE("elliptic sum: empty sum and argument checks") {
  for (long q : {-3L, 0L, 1L, 5L}) {
    CHECK(elliptic_apostol_sum(1, CoprimePair(1, q), TauPoint(cplx(0.0, 2.0))).value.abs() == 0.0);
    CHECK(elliptic_apostol_sum(2, CoprimePair(1, q), kI, Route::bernoulli_product).value.abs() == 0.0);
  }
  CHECK_THROWS_AS(elliptic_apostol_sum(0, CoprimePair(3, 2), kI), ArgumentError);
  CHECK_THROWS_AS(CoprimePair(4, 6), CoprimalityError);
}

TEST_CASE("elliptic sum reference values") {
  // Frozen from an independent double-precision prototype (both routes).
  struct Ref {
    int n;
    long p, q;
    cplx tau, value;
  };
  const std::vector<Ref> refs{
      {1, 3, 2, cplx(0, 1), cplx(1.064281766553913, 0.0)},
      {2, 5, 3, cplx(0.3, 1.1), cplx(33.38560767230741, -13.365606409820561)},
      {3, 4, 7, cplx(0, 1.4), cplx(699.846126935398, 0.0)},
  };
  for (const auto& r : refs) {
    for (Route route : {Route::zeta_derivative, Route::bernoulli_product}) {
      const auto res = elliptic_apostol_sum(r.n, CoprimePair(r.p, r.q), TauPoint(r.tau), route);
      CHECK(dist(res.value.value, r.value) < 1e-10 * std::abs(r.value));
      CHECK(res.n == r.n);
      CHECK(res.route == route);
    }
  }
}

TEST_CASE("elliptic sum: both routes agree") {
  const auto a = elliptic_apostol_sum(2, CoprimePair(7, 3), kI, Route::zeta_derivative);
  const auto b = elliptic_apostol_sum(2, CoprimePair(7, 3), kI, Route::bernoulli_product);
  CHECK(dist(a.value.value, b.value.value) <= a.value.err + b.value.err);
  for (const auto& s : random_samples(25, 41, false)) {
    const CoprimePair pair(s.p, s.q);
    const auto x = elliptic_apostol_sum(s.n, pair, s.tau, Route::zeta_derivative);
    const auto y = elliptic_apostol_sum(s.n, pair, s.tau, Route::bernoulli_product);
    CHECK(dist(x.value.value, y.value.value) <= x.value.err + y.value.err);
  }
}

TEST_CASE("elliptic sum: Dedekind symbol axioms (random)") {
  const TauPoint t(cplx(0.3, 1.1));
  const auto base = elliptic_apostol_sum(1, CoprimePair(5, 2), t);
  const auto shifted = elliptic_apostol_sum(1, CoprimePair(5, 7), t);
  const auto negated = elliptic_apostol_sum(1, CoprimePair(5, -2), t);
  CHECK(dist(base.value.value, shifted.value.value) <= 2 * (base.value.err + shifted.value.err));
  CHECK(std::abs(base.value.value + negated.value.value) <= 2 * (base.value.err + negated.value.err));
  for (const auto& s : random_samples(50, 7, false)) {
    const auto d = elliptic_apostol_sum(s.n, CoprimePair(s.p, s.q), s.tau).value;
    const auto dp = elliptic_apostol_sum(s.n, CoprimePair(s.p, s.q + s.p), s.tau).value;
    const auto dn = elliptic_apostol_sum(s.n, CoprimePair(s.p, -s.q), s.tau).value;
    CHECK(dist(d.value, dp.value) <= 2 * (d.err + dp.err));
    CHECK(std::abs(d.value + dn.value) <= 2 * (d.err + dn.err));
  }
}

TEST_CASE("reciprocity law (random pairs)") {
  for (const auto& tv : {cplx(0, 1), cplx(0.3, 1.1)}) {
    const TauPoint t(tv);
    for (auto [n, p, q] : {std::tuple{1, 3L, 2L}, std::tuple{2, 5L, 3L}}) {
      const CoprimePair pair(p, q);
      const ComplexVal r = elliptic_apostol_sum(n, pair, t).value + elliptic_apostol_sum(n, pair.swapped(), t).value -
                           reciprocity_rhs(n, pair, t);
      CHECK(r.abs() <= r.err);
    }
  }
  for (const auto& s : random_samples(50, 9, true)) {
    const CoprimePair pair(s.p, s.q);
    const ComplexVal r = elliptic_apostol_sum(s.n, pair, s.tau).value +
                         elliptic_apostol_sum(s.n, pair.swapped(), s.tau).value - reciprocity_rhs(s.n, pair, s.tau);
    CHECK(r.abs() <= r.err);
  }
}

TEST_CASE("reciprocity function: symmetry and three-term relation") {
  for (const auto& s : random_samples(30, 12, true)) {
    const CoprimePair pair(s.p, s.q);
    const ComplexVal a = reciprocity_rhs(s.n, pair, s.tau), b = reciprocity_rhs(s.n, pair.swapped(), s.tau);
    CHECK(dist(a.value, b.value) <= 2 * (a.err + b.err));
    const ComplexVal three = reciprocity_rhs(s.n, CoprimePair(s.p + s.q, s.q), s.tau) +
                             reciprocity_rhs(s.n, CoprimePair(s.p, s.p + s.q), s.tau) - a;
    CHECK(three.abs() <= three.err);
  }
  CHECK_THROWS_AS(reciprocity_rhs(1, CoprimePair(3, -2), kI), CoprimalityError);
}

TEST_CASE("reciprocity polynomial matches the direct evaluation") {
  const TauPoint t(cplx(-0.2, 1.3));
  for (int n = 1; n <= 4; ++n) {
    const ErrLaurent poly = reciprocity_polynomial(n, t);
    for (const auto& e : poly) {
      // Support is (2j - 1, 2n + 1 - 2j) plus the (-1, -1) term.
      const bool tail = e.first == Exponent{-1, -1};
      CHECK((tail || e.first.first + e.first.second == 2 * n));
      CHECK(e.first.first % 2 != 0);
    }
    const CoprimePair pair(5, 3);
    const ComplexVal a = evaluate(poly, 5, 3), b = reciprocity_rhs(n, pair, t);
    CHECK(dist(a.value, b.value) <= a.err + b.err + 1e-13 * b.abs());
  }
}

TEST_CASE("degeneration toward the Apostol sums") {
  for (auto [n, p, q] : {std::tuple{1, 3L, 1L}, std::tuple{1, 5L, 3L}, std::tuple{2, 5L, 2L}}) {
    const cplx lim = apostol_limit(n, p, q);
    const auto d = elliptic_apostol_sum(n, CoprimePair(p, q), TauPoint(cplx(0.0, 20.0))).value;
    CHECK(dist(d.value, lim) < 1e-8);
  }
  // The reciprocity function tends to 2 (2 pi i)^w / w! g_w(p, q).
  for (auto [w, p, q] : {std::tuple{2, 3L, 1L}, std::tuple{4, 5L, 2L}}) {
    const cplx expect = 2.0 * two_pi_i_pow(w) / factorial(w).to_double() *
                        g_poly(w).evaluate(Rational(p), Rational(q)).to_double();
    CHECK(dist(reciprocity_rhs(w / 2, CoprimePair(p, q), TauPoint(cplx(0.0, 20.0))).value, expect) < 1e-8);
  }
}

TEST_CASE("generating function D: oddness, empty sum, Taylor coefficients") {
  CHECK(generating_D(CoprimePair(1, 4), kI, 0.2).abs() == 0.0);
  CHECK_THROWS_AS(generating_D(CoprimePair(3, 2), kI, 0.2), ArgumentError);
  const TauPoint t(cplx(0.1, 1.2));
  for (double x : {0.0, 0.01, -0.07}) {
    const ComplexVal a = generating_D(CoprimePair(3, 2), t, x), b = generating_D(CoprimePair(3, -2), t, x);
    CHECK(std::abs(a.value + b.value) <= 2 * (a.err + b.err));
  }
  const CoprimePair pair(3, 2);
  const double x = 0.01;
  const cplx even = 0.5 * (generating_D(pair, kI, x).value + generating_D(pair, kI, -x).value);
  cplx series = generating_D(pair, kI, 0.0).value;
  for (int n = 1; n <= 3; ++n) series += elliptic_apostol_sum(n, pair, kI).value.value * std::pow(x, 2 * n);
  CHECK(dist(even, series) < 1e-8);
}

TEST_CASE("generating function R: symmetry and Taylor coefficients") {
  const CoprimePair pair(2, 1);
  for (double x : {0.05, -0.11}) {
    const ComplexVal a = generating_R(CoprimePair(3, 2), kI, x), b = generating_R(CoprimePair(2, 3), kI, x);
    CHECK(dist(a.value, b.value) <= 2 * (a.err + b.err));
  }
  CHECK_THROWS_AS(generating_R(pair, kI, 0.0), SingularityError);
  CHECK_THROWS_AS(generating_R(pair, kI, 0.3), ArgumentError);
  auto even = [&](double x) { return 0.5 * (generating_R(pair, kI, x).value + generating_R(pair, kI, -x).value); };
  const std::vector<cplx> coeff = even_taylor_coefficients(even, 3);
  CHECK(dist(coeff[1], reciprocity_rhs(1, pair, kI).value) < 1e-6);
}

TEST_CASE("even Taylor extraction recovers a known series") {
  auto f = [](double x) { return cplx(std::cosh(x), std::cos(2 * x)); };
  const std::vector<cplx> c = even_taylor_coefficients(f, 3);
  CHECK(dist(c[0], cplx(1.0, 1.0)) < 1e-12);
  CHECK(dist(c[1], cplx(0.5, -2.0)) < 1e-8);
  CHECK(dist(c[2], cplx(1.0 / 24, 16.0 / 24)) < 1e-4);
  CHECK_THROWS_AS(even_taylor_coefficients(f, 8, 1e-2, 7), ArgumentError);
}

TEST_CASE("generating-function reciprocity constant") {
  for (const auto& tv : {cplx(0, 1), cplx(0.2, 1.2)}) {
    const TauPoint t(tv);
    const CoprimePair pair(3, 2);
    const cplx c = reciprocity_constant(pair, t).value;
    CHECK(dist(c, -eisenstein(1, t).value / (kTwoPiI * kTwoPiI * 6.0)) < 1e-15);
    std::vector<cplx> values;
    for (double x : {0.003, 0.007, 0.011}) {
      const ComplexVal r = generating_D(pair, t, x) + generating_D(pair.swapped(), t, x) - generating_R(pair, t, x);
      values.push_back(r.value);
      CHECK(dist(r.value, c) < 1e-8);
    }
    CHECK(dist(values[0], values[1]) < 1e-8);
    CHECK(dist(values[1], values[2]) < 1e-8);
  }
}

TEST_CASE("B_1 double sums: constant in s, matches the B_2 class sum") {
  const CoprimePair pair(3, 2);
  const ComplexVal a = b1_sum_residual(pair, 0.004, kI), b = b1_sum_residual(pair, 0.009, kI);
  CHECK(dist(a.value, b.value) <= a.err + b.err);
  const cplx c = -eisenstein(1, kI).value / (kTwoPiI * kTwoPiI * 6.0);
  CHECK(dist(a.value, c) < 1e-8);
  const ComplexVal closed = b2_class_sum(pair, kI);
  CHECK(dist(a.value, closed.value) <= a.err + closed.err);
  for (auto [p, q] : {std::pair{5L, 3L}, std::pair{1L, 1L}, std::pair{4L, 7L}}) {
    const TauPoint t(cplx(-0.15, 0.95));
    const CoprimePair pq(p, q);
    const ComplexVal r = b1_sum_residual(pq, 0.02 / static_cast<double>(std::max(p, q)), t);
    const ComplexVal k = b2_class_sum(pq, t);
    CHECK(dist(r.value, k.value) <= r.err + k.err);
    CHECK(dist(r.value, reciprocity_constant(pq, t).value) < 1e-8);
  }
  CHECK_THROWS_AS(b1_sum_residual(pair, 0.0, kI), SingularityError);
}

TEST_CASE("machide sums") {
  MachideSpec half;
  half.m = 1;
  half.n = 1;
  half.x = {-0.5, 0.0};
  half.y = {-0.5, 0.0};
  half.z = {0.0, 0.0};
  CHECK(machide_sum(half, kI).abs() < 1e-14);

  MachideSpec degenerate = half;
  degenerate.x = {0.0, 0.0};
  CHECK_THROWS_AS(machide_sum(degenerate, kI), ArgumentError);
  MachideSpec negative = half;
  negative.c = {0, 1};
  CHECK_THROWS_AS(negative.validate(), ArgumentError);

  const MachideSpec r = half.rotated().rotated().rotated();
  CHECK(r.a == half.a);
  CHECK(r.x == half.x);

  for (auto [p, q] : {std::pair{3L, 2L}, std::pair{5L, 3L}}) {
    const MachideCombinations c = machide_combinations(CoprimePair(p, q), 0.013, 0.007, kI);
    CHECK(c.first.abs() <= c.first.err + 1e-12);
    CHECK(c.second.abs() <= c.second.err + 1e-12);
    CHECK(c.third.abs() <= c.third.err + 1e-12);
    CHECK(c.first.abs() < 1e-7);
    CHECK(c.second.abs() < 1e-7);
    CHECK(c.third.abs() < 1e-7);
  }
  // Small perturbations of the shifts.
  const MachideCombinations c = machide_combinations(CoprimePair(4, 3), 0.021, -0.011, TauPoint(cplx(0.25, 1.05)));
  CHECK(c.third.abs() < 1e-7);
}
