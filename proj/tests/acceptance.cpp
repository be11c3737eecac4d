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

// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <memory>
#include <numeric>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "ellded/exact.hpp"
#include "ellded/identities.hpp"
#include "ellded/symbols.hpp"

using namespace ellded;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

struct Case {
  int n;
  long p, q;
  cplx tau;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

cplx two_pi_i_pow(int e) {
  cplx r = 1.0;
  for (int i = 0; i < e; ++i) r *= kTwoPiI;
  return r;
}

// Twenty fixed cases with n <= 3, p, q <= 7, tau in {i, 0.3+1.1i, 1.4i}.
std::vector<Case> fixed_cases() {
  const std::array<cplx, 3> taus{cplx(0, 1), cplx(0.3, 1.1), cplx(0, 1.4)};
  const std::vector<std::pair<long, long>> pairs{{3, 2}, {5, 3}, {7, 4}, {2, 1}, {7, 6}, {5, 2}, {4, 3},
                                                 {6, 5}, {7, 3}, {5, 4}, {3, 1}, {7, 2}, {6, 1}, {4, 1},
                                                 {7, 5}, {5, 1}, {1, 1}, {7, 1}, {3, 7}, {2, 5}};
  std::vector<Case> out;
  for (std::size_t i = 0; i < pairs.size(); ++i)
    out.push_back({1 + static_cast<int>(i % 3), pairs[i].first, pairs[i].second, taus[(i / 3 + i) % 3]});
  return out;
}

Outcome exact_reciprocity() {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  int count = 0;
  for (int w = 2; w <= 10; w += 2)
    for (long p = 1; p <= 30; ++p)
      for (long q = 1; q <= 30; ++q) {
        if (std::gcd(p, q) != 1) continue;
        ++count;
        if (!verify_apostol_reciprocity(w, CoprimePair(p, q)).is_zero()) o.pass = false;
      }
  const double dt = seconds_since(t0);
  o.pass = o.pass && dt < 10.0;
  o.detail = std::to_string(count) + " exact residuals, " + fmt("%.2f s", dt);
  return o;
}

Outcome elliptic_reciprocity() {
  const auto t0 = std::chrono::steady_clock::now();
  double worst = 0.0;
  for (const Case& c : fixed_cases()) {
    const TauPoint tau(c.tau);
    const CoprimePair pair(c.p, c.q);
    const ComplexVal r = elliptic_apostol_sum(c.n, pair, tau).value +
                         elliptic_apostol_sum(c.n, pair.swapped(), tau).value - reciprocity_rhs(c.n, pair, tau);
    worst = std::max(worst, r.abs());
  }
  const double dt = seconds_since(t0);
  return {worst < 1e-8 && dt < 30.0, "max |D+D-R| = " + fmt("%.3e", worst) + ", " + fmt("%.2f s", dt)};
}

Outcome symbol_axioms() {
  double worst = 0.0;
  for (const Case& c : fixed_cases()) {
    const TauPoint tau(c.tau);
    const ComplexVal d = elliptic_apostol_sum(c.n, CoprimePair(c.p, c.q), tau).value;
    const ComplexVal shifted = elliptic_apostol_sum(c.n, CoprimePair(c.p, c.q + c.p), tau).value;
    const ComplexVal negated = elliptic_apostol_sum(c.n, CoprimePair(c.p, -c.q), tau).value;
    worst = std::max({worst, std::abs(d.value - shifted.value), std::abs(d.value + negated.value)});
  }
  return {worst < 1e-9, "max residual = " + fmt("%.3e", worst)};
}

Outcome degeneration() {
  Outcome o;
  std::ostringstream detail;
  for (auto [n, p, q] : {std::tuple{1, 3L, 1L}, std::tuple{1, 5L, 3L}, std::tuple{2, 5L, 2L}}) {
    const Rational exact = Rational(p).pow(2 * n) * apostol_sum(2 * n + 1, q, p) / factorial(2 * n + 1);
    const cplx limit = -two_pi_i_pow(2 * n) * exact.to_double();
    auto residual = [&](double height) {
      return std::abs(elliptic_apostol_sum(n, CoprimePair(p, q), TauPoint(cplx(0.0, height))).value.value - limit);
    };
    const double r10 = residual(10.0), r20 = residual(20.0);
    const bool ok = r20 < 1e-6 && r20 < r10;
    o.pass = o.pass && ok;
    detail << "(" << n << "," << p << "," << q << "): 10i " << fmt("%.3e", r10) << " 20i " << fmt("%.3e", r20)
           << (ok ? "" : " [not monotone]") << "; ";
  }
  o.detail = detail.str();
  return o;
}

Outcome generating_reciprocity() {
  double spread = 0.0, offset = 0.0;
  const CoprimePair pair(3, 2);
  for (const cplx tv : {cplx(0, 1), cplx(0.2, 1.2)}) {
    const TauPoint tau(tv);
    const cplx c = reciprocity_constant(pair, tau).value;
    std::vector<cplx> values;
    for (double x : {0.003, 0.007, 0.011})
      values.push_back((generating_D(pair, tau, x) + generating_D(pair.swapped(), tau, x) - generating_R(pair, tau, x))
                           .value);
    for (std::size_t i = 0; i < values.size(); ++i) {
      offset = std::max(offset, std::abs(values[i] - c));
      for (std::size_t j = i + 1; j < values.size(); ++j) spread = std::max(spread, std::abs(values[i] - values[j]));
    }
  }
  return {spread < 1e-8 && offset < 1e-8, "x-spread " + fmt("%.3e", spread) + ", constant offset " + fmt("%.3e", offset)};
}

Outcome b1_sums() {
  Outcome o;
  double spread = 0.0, offset = 0.0, closed_gap = 0.0, closed_err = 0.0;
  const CoprimePair pair(3, 2);
  for (const cplx tv : {cplx(0, 1), cplx(0.2, 1.2)}) {
    const TauPoint tau(tv);
    const ComplexVal a = b1_sum_residual(pair, 0.004, tau), b = b1_sum_residual(pair, 0.009, tau);
    const ComplexVal closed = b2_class_sum(pair, tau);
    const cplx c = reciprocity_constant(pair, tau).value;
    spread = std::max(spread, std::abs(a.value - b.value));
    offset = std::max({offset, std::abs(a.value - c), std::abs(b.value - c)});
    const double gap = std::abs(a.value - closed.value);
    if (gap > a.err + closed.err) o.pass = false;
    closed_gap = std::max(closed_gap, gap);
    closed_err = std::max(closed_err, a.err + closed.err);
  }
  o.pass = o.pass && spread < 1e-8 && offset < 1e-8;
  o.detail = "s-spread " + fmt("%.3e", spread) + ", constant offset " + fmt("%.3e", offset) + ", closed form gap " +
             fmt("%.3e", closed_gap) + " (err " + fmt("%.3e", closed_err) + ")";
  return o;
}

Outcome machide() {
  double worst = 0.0;
  for (auto [p, q] : {std::pair{3L, 2L}, std::pair{5L, 3L}}) {
    const MachideCombinations c = machide_combinations(CoprimePair(p, q), 0.013, 0.007, TauPoint(cplx(0, 1)));
    worst = std::max({worst, c.first.abs(), c.second.abs(), c.third.abs()});
  }
  return {worst < 1e-7, "max combination = " + fmt("%.3e", worst)};
}

Outcome binomial_identities() {
  const auto t0 = std::chrono::steady_clock::now();
  double worst = 0.0;
  for (int n = 1; n <= 4; ++n)
    for (const cplx tv : {cplx(0, 1), cplx(0.3, 1.0)})
      for (int k = 1; k <= 2 * n + 2; ++k) worst = std::max(worst, binomial_identity_residual(n, k, TauPoint(tv)).relative());
  const TauPoint t(cplx(0.3, 1.0));
  const cplx e2 = eisenstein(1, t).value, e4 = eisenstein(2, t).value;
  const double vdp = std::abs(kTwoPiI * eisenstein_tau_derivative(1, t).value + e2 * e2 - 5.0 * e4) / std::abs(5.0 * e4);
  const double dt = seconds_since(t0);
  return {worst < 1e-8 && vdp < 1e-9 && dt < 10.0,
          "max relative " + fmt("%.3e", worst) + ", weight-2 derivative identity " + fmt("%.3e", vdp) + ", " +
              fmt("%.2f s", dt)};
}

Outcome one_dim_expansion() {
  double worst = 0.0;
  for (int w : {2, 4, 6, 8, 12})
    for (const cplx tv : {cplx(0, 1), cplx(0.1, 1.1)})
      worst = std::max(worst, eisenstein_expansion_residual(w, TauPoint(tv), {}, 1e-12).relative());
  return {worst < 1e-7, "max relative " + fmt("%.3e", worst)};
}

Outcome rank_demo() {
  Outcome o;
  std::ostringstream detail;
  for (int w = 2; w <= 14; w += 2) {
    const int expect = dim_data(w).dim_m;
    const int rank = basis_rank(w, sample_taus(expect + 2, 7)).rank;
    bool capped = true;
    for (int count = 1; count <= expect + 3; ++count)
      capped = capped && basis_rank(w, sample_taus(count, 1000 + count)).rank <= expect;
    o.pass = o.pass && rank == expect && capped;
    detail << "w=" << w << ":" << rank << "/" << expect << (capped ? "" : "!") << " ";
  }
  o.detail = detail.str();
  return o;
}

Outcome cross_routes() {
  Outcome o;
  int count = 0;
  double worst_ratio = 0.0;
  auto compare = [&](int n, long p, long q, const TauPoint& tau) {
    const CoprimePair pair(p, q);
    const ComplexVal a = elliptic_apostol_sum(n, pair, tau, Route::zeta_derivative).value;
    const ComplexVal b = elliptic_apostol_sum(n, pair, tau, Route::bernoulli_product).value;
    const double gap = std::abs(a.value - b.value);
    worst_ratio = std::max(worst_ratio, gap / (a.err + b.err));
    o.pass = o.pass && gap <= a.err + b.err;
    ++count;
  };
  for (const Case& c : fixed_cases()) compare(c.n, c.p, c.q, TauPoint(c.tau));
  compare(2, 7, 3, TauPoint(cplx(0, 1)));
  const std::vector<TauPoint> taus = sample_taus(12, 5);
  for (std::size_t i = 0; i < taus.size(); ++i) {
    const long p = 2 + static_cast<long>(i % 6);
    long q = 1 + static_cast<long>((7 * i) % 11);
    while (std::gcd(p, q) != 1) ++q;
    compare(1 + static_cast<int>(i % 3), p, (i % 2 ? -q : q), taus[i]);
  }
  double lattice_gap = 0.0;
  const TauPoint tau(cplx(0, 1));
  for (int k : {3, 4}) {
    const ComplexVal c = kronecker_direct(k, cplx(-0.25, 0.4), tau, LatticeCutoff(400));
    cplx pref = ((k % 2 == 1) ? 1.0 : -1.0) * factorial(k).to_double() / two_pi_i_pow(k);
    const ComplexVal lattice = scale(pref, c);
    const ComplexVal direct = elliptic_bernoulli(k, 0.25, 0.4, tau);
    const double gap = std::abs(lattice.value - direct.value);
    lattice_gap = std::max(lattice_gap, gap);
    o.pass = o.pass && gap <= lattice.err + direct.err;
  }
  o.detail = std::to_string(count) + " route pairs, max gap/err " + fmt("%.3f", worst_ratio) + "; lattice gap " +
             fmt("%.3e", lattice_gap);
  return o;
}

std::string capture(const std::string& cmd) {
  std::string out;
  std::unique_ptr<FILE, int (*)(FILE*)> pipe(popen(cmd.c_str(), "r"), pclose);
  if (!pipe) return "<popen failed>";
  std::array<char, 4096> buf{};
  std::size_t got;
  while ((got = std::fread(buf.data(), 1, buf.size(), pipe.get())) > 0) out.append(buf.data(), got);
  return out;
}

Outcome determinism() {
  const std::string tool = ELLDED_TOOL;
  const std::vector<std::string> cmds{
      "verify basis-rank -w 14 --num-tau 5 --seed 11",
      "verify thm11 -n 3 -p 7 -q 5 --tau 0.3+1.1i",
      "verify thm13 --tau 0.2+1.2i",
      "verify prop31",
      "verify lemma32 -p 5 -q 3",
      "verify eq73 -n 4 --format csv",
      "verify eq64 -w 12 --tau 0.1+1.1i",
      "verify three-term -n 2 -p 3 -q 2 --tau 0.2+1.3i",
      "verify limit -n 2 -p 5 -q 2",
  };
  Outcome o;
  for (const auto& c : cmds) {
    const std::string line = tool + " " + c + " 2>&1";
    const std::string a = capture(line), b = capture(line);
    if (a != b || a.empty()) {
      o.pass = false;
      o.detail += "differs: " + c + "; ";
    }
  }
  if (o.pass) o.detail = std::to_string(cmds.size()) + " commands repeated byte-identically";
  return o;
}

}  // namespace

int main() {
  set_warning_sink([](const std::string&) {});
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"exact Apostol reciprocity, w <= 10, p, q <= 30", exact_reciprocity},
      {"elliptic reciprocity on 20 fixed cases", elliptic_reciprocity},
      {"symbol periodicity and oddness", symbol_axioms},
      {"degeneration to the Apostol sums", degeneration},
      {"generating-function reciprocity and constant", generating_reciprocity},
      {"B_1 division-point sums", b1_sums},
      {"Dedekind-Rademacher combinations", machide},
      {"binomial Eisenstein identities", binomial_identities},
      {"one-dimensional Eisenstein expansion", one_dim_expansion},
      {"rank of reciprocity polynomials", rank_demo},
      {"cross-route agreement", cross_routes},
      {"deterministic CLI output", determinism},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("threw: ") + e.what()};
    }
    if (!o.pass) ++failed;
    std::printf("%s %2zu %s: %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(), o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
