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
#include <random>
#include <set>
#include <string>

#include <Eigen/SVD>

#include "ellded/identities.hpp"

namespace ellded {

RationalLaurent odd_period_polynomial(int n) {
  if (n < 1) throw ArgumentError("odd_period_polynomial: n must be >= 1");
  RationalLaurent r;
  const Rational f2n = factorial(2 * n);
  for (int j = 0; j <= n + 1; ++j) {
    const Rational c = f2n * bernoulli_number(2 * j) * bernoulli_number(2 * n + 2 - 2 * j) /
                       (Rational(2) * factorial(2 * j) * factorial(2 * n + 2 - 2 * j));
    r.add_term(2 * j - 1, 2 * n + 1 - 2 * j, -c);
  }
  r.add_term(-1, -1, -bernoulli_number(2 * n + 2) / Rational(4 * (n + 1)));
  return r;
}

PeriodData eisenstein_period_data(int n, double zeta_tol) {
  if (n < 1) throw ArgumentError("eisenstein_period_data: n must be >= 1");
  PeriodData d;
  d.n = n;
  const double z = zeta_odd(n, zeta_tol);
  const double f2n = factorial(2 * n).to_double();
  cplx pw = 1.0;
  for (int i = 0; i < 2 * n + 1; ++i) pw *= kTwoPiI;
  d.r2n = f2n * z / (2.0 * pw);
  d.petersson = f2n / std::pow(4.0 * kPi, 2 * n + 1) *
                (bernoulli_number(2 * n + 2) / Rational(2 * (2 * n + 2))).to_double() * z;
  d.odd_period = odd_period_polynomial(n);
  return d;
}

EisensteinExpansionResidual eisenstein_expansion_residual(int w, const TauPoint& tau, const SeriesPolicy& policy,
                                                          double zeta_tol) {
  require_even_weight(w);
  if (dim_data(w).d != 0)
    throw ArgumentError("eisenstein_expansion_residual: weight " + std::to_string(w + 2) + " has cusp forms");
  const int n = w / 2;
  const PeriodData pd = eisenstein_period_data(n, zeta_tol);
  const ComplexVal g = eisenstein_normalized(n + 1, tau, policy);
  const cplx k = -(cplx(0.0, 2.0) * std::pow(kPi, w) / factorial(w).to_double()) * (pd.r2n / pd.petersson);

  const ErrLaurent lhs = reciprocity_polynomial(n, tau, policy);
  EisensteinExpansionResidual out;
  std::set<Exponent> support;
  for (const auto& [e, c] : lhs) support.insert(e);
  for (const auto& [e, c] : pd.odd_period.terms()) support.insert(e);

  // Magnitudes of the Eisenstein products feeding each coefficient.
  std::vector<double> e_abs(n + 2);
  for (int j = 1; j <= n + 1; ++j) e_abs[j] = eisenstein(j, tau, policy).abs();
  const double de_abs = eisenstein_tau_derivative(n, tau, policy).abs();
  const double inv = 1.0 / (4.0 * kPi * kPi);
  std::map<Exponent, double> mag;
  for (int j = 1; j <= n; ++j) mag[{2 * j - 1, 2 * n + 1 - 2 * j}] += inv * e_abs[j] * e_abs[n + 1 - j];
  mag[{2 * n + 1, -1}] += inv * e_abs[n + 1];
  mag[{-1, 2 * n + 1}] += inv * e_abs[n + 1];
  mag[{-1, -1}] += inv * (2 * n + 1) * e_abs[n + 1];
  mag[{2 * n - 1, 1}] += de_abs / (4.0 * kPi * n);
  mag[{1, 2 * n - 1}] += de_abs / (4.0 * kPi * n);

  for (const Exponent& e : support) {
    auto it = lhs.find(e);
    const cplx left = it == lhs.end() ? cplx(0.0) : it->second.value;
    const cplx right = k * pd.odd_period.coefficient(e.first, e.second).to_double() * g.value;
    const cplx diff = left - right;
    out.coefficients[e] = diff;
    out.max_abs = std::max(out.max_abs, std::abs(diff));
    out.scale = std::max(out.scale, mag[e] + std::abs(right));
  }
  return out;
}

RankResult basis_rank(int w, const std::vector<TauPoint>& taus, const SeriesPolicy& policy, double rel_threshold) {
  require_even_weight(w);
  if (taus.empty()) throw ArgumentError("basis_rank: need at least one tau");
  const int n = w / 2;
  std::vector<ErrLaurent> rows;
  rows.reserve(taus.size());
  std::set<Exponent> support;
  for (const TauPoint& t : taus) {
    rows.push_back(reciprocity_polynomial(n, t, policy));
    for (const auto& [e, c] : rows.back()) support.insert(e);
  }
  RankResult out;
  out.columns.assign(support.begin(), support.end());
  Eigen::MatrixXcd m(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(out.columns.size()));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < out.columns.size(); ++j) {
      auto it = rows[i].find(out.columns[j]);
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = it == rows[i].end() ? cplx(0.0) : it->second.value;
    }
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
  const auto& sv = svd.singularValues();
  out.singular_values.assign(sv.data(), sv.data() + sv.size());
  const double top = sv.size() > 0 ? sv(0) : 0.0;
  for (double s : out.singular_values)
    if (s > rel_threshold * top) ++out.rank;
  return out;
}

std::vector<TauPoint> sample_taus(int count, std::uint64_t seed) {
  if (count < 0) throw ArgumentError("sample_taus: count must be >= 0");
  // Raw 53-bit draws rather than a distribution object, whose output is
  // implementation-defined.
  std::mt19937_64 gen(seed);
  auto unit = [&gen] { return static_cast<double>(gen() >> 11) * 0x1.0p-53; };
  std::vector<TauPoint> out;
  out.reserve(count);
  for (int i = 0; i < count; ++i) {
    const double re = -0.4 + 0.8 * unit();
    const double im = 0.8 + 0.7 * unit();
    out.emplace_back(cplx(re, im));
  }
  return out;
}

}  // namespace ellded
