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

#include <cstdint>
#include <map>
#include <vector>

#include "ellded/exact.hpp"
#include "ellded/qseries.hpp"
#include "ellded/symbols.hpp"

namespace ellded {

/// A residual together with the magnitude of the terms that cancelled to
/// produce it, so callers can judge it relatively.
struct Residual {
  ComplexVal residual;
  double scale = 0.0;

  double abs() const { return residual.abs(); }
  double relative() const { return scale > 0.0 ? residual.abs() / scale : residual.abs(); }
};

/// c_0, ..., c_{n+1}: the coefficients of p^{2j} q^{2n+2-2j} in T^-_{2n}.
struct CoefficientVector {
  int n = 0;
  std::vector<ComplexVal> c;
  /// Magnitude of the terms combined into each c_j. At points where some
  /// E_{2k} vanishes (tau = i, say) the c_j themselves can all be tiny.
  std::vector<double> magnitude;
};

CoefficientVector c_coefficients(int n, const TauPoint& tau, const SeriesPolicy& policy = {});

/// For 1 <= k <= 2n+2:
///   sum_{2i >= k-1} C(2i, k-1) c_i + sum_{2i <= k} C(2n+2-2i, 2n+2-k) c_i - c_{floor(k/2)}
/// (c_{(k-1)/2} for odd k). Vanishes identically in tau.
Residual binomial_identity_residual(int n, int k, const TauPoint& tau, const SeriesPolicy& policy = {});

/// T^-_{2n}(p, q; tau) = (2 pi i)^2 pq R^-_{2n}(p, q; tau) - (2n+1) E_{2n+2}(tau).
ComplexVal t_value(int n, long p, long q, const TauPoint& tau, const SeriesPolicy& policy = {});

/// p T(p+q, q) + q T(p, p+q) - (p+q) T(p, q).
Residual three_term_residual(int n, const CoprimePair& pair, const TauPoint& tau, const SeriesPolicy& policy = {});

/// S(p+q, q) + S(p, p+q) - S(p, q) with S = T / ((2 pi i)^2 pq).
Residual unweighted_three_term_residual(int n, const CoprimePair& pair, const TauPoint& tau,
                                        const SeriesPolicy& policy = {});

struct PeriodData {
  int n = 0;
  cplx r2n;            // r_{2n}(G_{2n+2})
  double petersson = 0;  // (G_{2n+2}, G_{2n+2})
  RationalLaurent odd_period;
};

/// zeta(2n+1) is computed to zeta_tol.
PeriodData eisenstein_period_data(int n, double zeta_tol = 1e-15);

/// Odd period polynomial r^-(G_{2n+2})(p, q), built from its own closed form.
RationalLaurent odd_period_polynomial(int n);

/// Coefficient-wise difference between R^-_w(.,.; tau) and its expansion in
/// the weight w+2 Eisenstein series alone, valid when S_{w+2} = 0.
struct EisensteinExpansionResidual {
  std::map<Exponent, cplx> coefficients;
  double max_abs = 0.0;
  double scale = 0.0;
  double relative() const { return scale > 0.0 ? max_abs / scale : max_abs; }
};

/// Throws ArgumentError when w has cusp forms (d_w > 0).
EisensteinExpansionResidual eisenstein_expansion_residual(int w, const TauPoint& tau, const SeriesPolicy& policy = {},
                                                          double zeta_tol = 1e-15);

struct RankResult {
  int rank = 0;
  std::vector<double> singular_values;
  std::vector<Exponent> columns;
};

/// Numerical rank of the matrix whose rows are the coefficient vectors of
/// R^-_w(.,.; tau_i). Singular values above rel_threshold * largest count.
RankResult basis_rank(int w, const std::vector<TauPoint>& taus, const SeriesPolicy& policy = {},
                      double rel_threshold = 1e-8);

/// Reproducible tau samples with Re in [-0.4, 0.4], Im in [0.8, 1.5].
std::vector<TauPoint> sample_taus(int count, std::uint64_t seed);

}  // namespace ellded
