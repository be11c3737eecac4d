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

#include "checks.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <string>

#include "ellded/exact.hpp"
#include "ellded/identities.hpp"
#include "ellded/symbols.hpp"

namespace ellded::cli {

namespace {

std::string shortest(double v) {
  char buf[400];
  const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::fixed);
  return std::string(buf, res.ptr);
}

std::string tau_string(const TauPoint& tau) {
  const cplx t = tau.tau();
  return shortest(t.real()) + (std::signbit(t.imag()) ? "" : "+") + shortest(t.imag()) + "i";
}

CheckLine line(std::string check, json params, double residual, double tol) {
  CheckLine l;
  l.check = std::move(check);
  l.params = std::move(params);
  l.residual = residual;
  l.tol = tol;
  l.pass = std::isfinite(residual) && residual < tol;
  return l;
}

}  // namespace

json CheckLine::to_json() const {
  json j;
  j["check"] = check;
  j["params"] = params;
  j["residual"] = residual;
  j["tol"] = tol;
  j["pass"] = pass;
  for (const auto& [k, v] : extra.items()) j[k] = v;
  return j;
}

void ToleranceTable::override_all(double tol) {
  reciprocity = axioms = generating = b1_sums = machide = binomial = three_term = eisenstein_expansion = limit = tol;
}

std::vector<CheckLine> check_apostol_reciprocity(int w_max, int pq_max) {
  if (w_max < 2) throw ArgumentError("--w-max must be >= 2");
  if (pq_max < 1) throw ArgumentError("--pq-max must be >= 1");
  std::vector<CheckLine> out;
  for (int w = 2; w <= w_max; w += 2) {
    Rational worst;
    long pairs = 0;
    for (long p = 1; p <= pq_max; ++p)
      for (long q = 1; q <= pq_max; ++q) {
        if (std::gcd(p, q) != 1) continue;
        ++pairs;
        const Rational r = verify_apostol_reciprocity(w, CoprimePair(p, q));
        if (r.abs() > worst.abs()) worst = r;
      }
    CheckLine l;
    l.check = "apostol-reciprocity";
    l.params = {{"w", w}, {"pq_max", pq_max}, {"pairs", pairs}};
    l.residual = worst.str();
    l.tol = 0.0;
    l.pass = worst.is_zero();
    out.push_back(std::move(l));
  }
  return out;
}

std::vector<CheckLine> check_symbol_reciprocity(int n, long p, long q, const TauPoint& tau, const ToleranceTable& tols,
                                                const SeriesPolicy& policy) {
  const CoprimePair pair(p, q);
  pair.require_u();
  const json params = {{"n", n}, {"p", p}, {"q", q}, {"tau", tau_string(tau)}};
  auto d = [&](long a, long b) { return elliptic_apostol_sum(n, CoprimePair(a, b), tau, Route::zeta_derivative, policy).value; };
  const ComplexVal dpq = d(p, q);
  const ComplexVal recip = dpq + d(q, p) - reciprocity_rhs(n, pair, tau, policy);
  const ComplexVal period = d(p, q + p) - dpq;
  const ComplexVal odd = d(p, -q) + dpq;
  std::vector<CheckLine> out;
  out.push_back(line("thm11.reciprocity", params, recip.abs(), tols.reciprocity));
  out.push_back(line("thm11.periodicity", params, period.abs(), tols.axioms));
  out.push_back(line("thm11.oddness", params, odd.abs(), tols.axioms));
  return out;
}

std::vector<CheckLine> check_generating(long p, long q, const TauPoint& tau, const std::vector<double>& xs,
                                        const ToleranceTable& tols, const SeriesPolicy& policy) {
  if (xs.empty()) throw ArgumentError("need at least one x");
  const CoprimePair pair(p, q);
  pair.require_u();
  std::vector<ComplexVal> vals;
  for (double x : xs)
    vals.push_back(generating_D(pair, tau, x, policy) + generating_D(pair.swapped(), tau, x, policy) -
                   generating_R(pair, tau, x, policy));
  double spread = 0.0;
  for (std::size_t i = 0; i < vals.size(); ++i)
    for (std::size_t j = i + 1; j < vals.size(); ++j) spread = std::max(spread, std::abs(vals[i].value - vals[j].value));
  const ComplexVal expected = reciprocity_constant(pair, tau, policy);
  double dev = 0.0;
  for (const auto& v : vals) dev = std::max(dev, std::abs(v.value - expected.value));
  json params = {{"p", p}, {"q", q}, {"tau", tau_string(tau)}, {"x", xs}};
  std::vector<CheckLine> out;
  out.push_back(line("thm13.constancy", params, spread, tols.generating));
  out.push_back(line("thm13.constant", params, dev, tols.generating));
  return out;
}

std::vector<CheckLine> check_b1_sums(long p, long q, const TauPoint& tau, const std::vector<double>& ss,
                                     const ToleranceTable& tols, const SeriesPolicy& policy) {
  if (ss.empty()) throw ArgumentError("need at least one s");
  const CoprimePair pair(p, q);
  pair.require_u();
  std::vector<ComplexVal> vals;
  for (double s : ss) vals.push_back(b1_sum_residual(pair, s, tau, policy));
  double spread = 0.0;
  for (std::size_t i = 0; i < vals.size(); ++i)
    for (std::size_t j = i + 1; j < vals.size(); ++j) spread = std::max(spread, std::abs(vals[i].value - vals[j].value));
  const ComplexVal expected = reciprocity_constant(pair, tau, policy);
  const ComplexVal closed = b2_class_sum(pair, tau, policy);
  double dev = 0.0, closed_dev = 0.0, closed_err = 0.0;
  for (const auto& v : vals) {
    dev = std::max(dev, std::abs(v.value - expected.value));
    const ComplexVal diff = v - closed;
    closed_dev = std::max(closed_dev, diff.abs());
    closed_err = std::max(closed_err, diff.err);
  }
  json params = {{"p", p}, {"q", q}, {"tau", tau_string(tau)}, {"s", ss}};
  std::vector<CheckLine> out;
  out.push_back(line("prop31.constancy", params, spread, tols.b1_sums));
  out.push_back(line("prop31.constant", params, dev, tols.b1_sums));
  CheckLine cf = line("prop31.closed_form", params, closed_dev, closed_err);
  cf.pass = closed_dev <= closed_err;
  out.push_back(std::move(cf));
  return out;
}

std::vector<CheckLine> check_machide(long p, long q, double s, double t, const TauPoint& tau,
                                     const ToleranceTable& tols, const SeriesPolicy& policy) {
  const MachideCombinations mc = machide_combinations(CoprimePair(p, q), s, t, tau, policy);
  json params = {{"p", p}, {"q", q}, {"s", s}, {"t", t}, {"tau", tau_string(tau)}};
  std::vector<CheckLine> out;
  out.push_back(line("lemma32.two_term_a", params, mc.first.abs(), tols.machide));
  out.push_back(line("lemma32.two_term_b", params, mc.second.abs(), tols.machide));
  out.push_back(line("lemma32.seven_term", params, mc.third.abs(), tols.machide));
  return out;
}

std::vector<CheckLine> check_binomial(int n, int k, const TauPoint& tau, const ToleranceTable& tols,
                                      const SeriesPolicy& policy) {
  if (n < 1) throw ArgumentError("-n must be >= 1");
  std::vector<CheckLine> out;
  const int lo = k == 0 ? 1 : k;
  const int hi = k == 0 ? 2 * n + 2 : k;
  for (int kk = lo; kk <= hi; ++kk) {
    const Residual r = binomial_identity_residual(n, kk, tau, policy);
    CheckLine l = line("eq73", {{"n", n}, {"k", kk}, {"tau", tau_string(tau)}}, r.relative(), tols.binomial);
    l.extra["measure"] = "relative";
    out.push_back(std::move(l));
  }
  return out;
}

std::vector<CheckLine> check_three_term(int n, long p, long q, const TauPoint& tau, const ToleranceTable& tols,
                                        const SeriesPolicy& policy) {
  const Residual r = three_term_residual(n, CoprimePair(p, q), tau, policy);
  CheckLine l = line("three-term", {{"n", n}, {"p", p}, {"q", q}, {"tau", tau_string(tau)}}, r.abs(), tols.three_term);
  l.extra["scale"] = r.scale;
  return {l};
}

std::vector<CheckLine> check_eisenstein_expansion(int w, const TauPoint& tau, const ToleranceTable& tols,
                                                  const SeriesPolicy& policy) {
  const EisensteinExpansionResidual r = eisenstein_expansion_residual(w, tau, policy);
  CheckLine l = line("eq64", {{"w", w}, {"tau", tau_string(tau)}}, r.relative(), tols.eisenstein_expansion);
  l.extra["measure"] = "relative";
  l.extra["max_abs"] = r.max_abs;
  return {l};
}

std::vector<CheckLine> check_basis_rank(int w, int num_tau, std::uint64_t seed, const SeriesPolicy& policy) {
  const DimData dd = dim_data(w);
  if (num_tau < 1) throw ArgumentError("--num-tau must be >= 1");
  const RankResult r = basis_rank(w, sample_taus(num_tau, seed), policy);
  const int expected = std::min(dd.dim_m, num_tau);
  CheckLine l;
  l.check = "basis-rank";
  l.params = {{"w", w}, {"num_tau", num_tau}, {"seed", seed}};
  l.residual = std::abs(r.rank - expected);
  l.tol = 0.0;
  l.pass = r.rank == expected;
  l.extra["rank"] = r.rank;
  l.extra["expected"] = expected;
  l.extra["singular_values"] = r.singular_values;
  return {l};
}

std::vector<CheckLine> check_limit(int n, long p, long q, const std::vector<double>& heights,
                                   const ToleranceTable& tols, const SeriesPolicy& policy) {
  if (heights.empty()) throw ArgumentError("need at least one height");
  const CoprimePair pair(p, q);
  // -(2 pi i)^{2n}/(2n+1)! p^{2n} s_{2n+1}(q, p), the classical sum exact.
  const Rational exact = Rational(p).pow(2 * n) * apostol_sum(2 * n + 1, q, p) / factorial(2 * n + 1);
  const double sign = (n % 2 == 0) ? -1.0 : 1.0;  // -(i)^{2n}
  const double limit = sign * std::pow(2.0 * kPi, 2 * n) * exact.to_double();
  std::vector<CheckLine> out;
  std::vector<double> res;
  for (double h : heights) {
    const TauPoint tau(cplx(0.0, h));
    const ComplexVal d = elliptic_apostol_sum(n, pair, tau, Route::zeta_derivative, policy).value;
    res.push_back(std::abs(d.value - limit));
    CheckLine l = line("limit", {{"n", n}, {"p", p}, {"q", q}, {"tau", tau_string(tau)}}, res.back(), tols.limit);
    l.extra["classical"] = exact.str();
    out.push_back(std::move(l));
  }
  if (heights.size() >= 2) {
    bool decreasing = true;
    for (std::size_t i = 1; i < res.size(); ++i) decreasing = decreasing && res[i] < res[i - 1];
    CheckLine l;
    l.check = "limit.monotone";
    l.params = {{"n", n}, {"p", p}, {"q", q}, {"heights", heights}};
    l.residual = res;
    l.tol = 0.0;
    l.pass = decreasing;
    out.push_back(std::move(l));
  }
  return out;
}

}  // namespace ellded::cli
