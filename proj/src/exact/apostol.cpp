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

#include <numeric>
#include <string>

#include "ellded/exact.hpp"

namespace ellded {

CoprimePair::CoprimePair(long p, long q) : p_(p), q_(q) {
  if (p < 1) throw CoprimalityError("pair (" + std::to_string(p) + "," + std::to_string(q) + "): p must be >= 1");
  if (std::gcd(p, q) != 1)
    throw CoprimalityError("pair (" + std::to_string(p) + "," + std::to_string(q) + ") is not coprime");
}

const CoprimePair& CoprimePair::require_u() const {
  if (!in_u()) throw CoprimalityError("pair (" + std::to_string(p_) + "," + std::to_string(q_) + "): q must be >= 1");
  return *this;
}

void require_even_weight(int w) {
  if (w < 2 || w % 2 != 0) throw ArgumentError("weight w must be even and >= 2, got " + std::to_string(w));
}

Rational apostol_sum(int k, long q, long p) {
  if (k < 1) throw ArgumentError("apostol_sum: k must be >= 1");
  CoprimePair pair(p, q);
  Rational s;
  for (long mu = 1; mu < p; ++mu) s += Rational(mu, p) * bernoulli_function(k, Rational(mu * q, p));
  return s;
}

RationalLaurent g_poly(int w) {
  require_even_weight(w);
  RationalLaurent g;
  const Rational wf = factorial(w);
  for (int j = 0; j <= w / 2 + 1; ++j) {
    Rational c = wf * bernoulli_number(2 * j) * bernoulli_number(w + 2 - 2 * j) /
                 (Rational(2) * factorial(2 * j) * factorial(w + 2 - 2 * j));
    g.add_term(2 * j - 1, w + 1 - 2 * j, -c);
  }
  g.add_term(-1, -1, -bernoulli_number(w + 2) / Rational(2 * (w + 2)));
  return g;
}

Rational verify_apostol_reciprocity(int w, const CoprimePair& pair) {
  require_even_weight(w);
  pair.require_u();
  const long p = pair.p();
  const long q = pair.q();
  Rational lhs = Rational(p).pow(w) * apostol_sum(w + 1, q, p) + Rational(q).pow(w) * apostol_sum(w + 1, p, q);
  return lhs + Rational(2 * (w + 1)) * g_poly(w).evaluate(Rational(p), Rational(q));
}

DimData dim_data(int w) {
  require_even_weight(w);
  DimData r;
  r.d = (w + 2) / 12 - (w % 12 == 0 ? 1 : 0);
  r.dim_m = r.d + 1;
  return r;
}

namespace {

// p^a q^b (p+q)^e with e >= 0, expanded.
void add_shifted(RationalLaurent& out, int a, int b, int e, const Rational& c) {
  for (int t = 0; t <= e; ++t) out.add_term(a + t, b + e - t, c * binomial(e, t));
}

}  // namespace

RationalLaurent period_relation_residual(const RationalLaurent& g) {
  RationalLaurent r;
  for (const auto& [ex, c] : g.terms()) {
    const auto [i, j] = ex;
    if (i < -1 || j < -1)
      throw ArgumentError("period_relation_residual: exponent below -1 is not cleared by pq(p+q)");
    add_shifted(r, 1, j + 1, i + 1, c);   // g(p+q, q)
    add_shifted(r, i + 1, 1, j + 1, c);   // g(p, p+q)
    add_shifted(r, i + 1, j + 1, 1, -c);  // g(p, q)
  }
  return r;
}

}  // namespace ellded
