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
#include <string>
#include <vector>

#include "ellded/qseries.hpp"
#include "ellded/serialize.hpp"

namespace ellded::cli {

struct CheckLine {
  std::string check;
  json params;
  json residual;  // number, or "num/den" for exact checks
  double tol = 0.0;
  bool pass = false;
  json extra = json::object();

  json to_json() const;
};

/// Default tolerances per check family, overridable by ELLDED_TOL and --tol.
struct ToleranceTable {
  double exact = 0.0;
  double reciprocity = 1e-8;
  double axioms = 1e-9;
  double generating = 1e-8;
  double b1_sums = 1e-8;
  double machide = 1e-7;
  double binomial = 1e-8;
  double three_term = 1e-8;
  double eisenstein_expansion = 1e-7;
  double limit = 1e-6;

  /// Every entry except the exact one set to tol.
  void override_all(double tol);
};

std::vector<CheckLine> check_apostol_reciprocity(int w_max, int pq_max);
std::vector<CheckLine> check_symbol_reciprocity(int n, long p, long q, const TauPoint& tau, const ToleranceTable& tols,
                                                const SeriesPolicy& policy);
std::vector<CheckLine> check_generating(long p, long q, const TauPoint& tau, const std::vector<double>& xs,
                                        const ToleranceTable& tols, const SeriesPolicy& policy);
std::vector<CheckLine> check_b1_sums(long p, long q, const TauPoint& tau, const std::vector<double>& ss,
                                     const ToleranceTable& tols, const SeriesPolicy& policy);
std::vector<CheckLine> check_machide(long p, long q, double s, double t, const TauPoint& tau,
                                     const ToleranceTable& tols, const SeriesPolicy& policy);
/// k = 0 means all k in [1, 2n+2].
std::vector<CheckLine> check_binomial(int n, int k, const TauPoint& tau, const ToleranceTable& tols,
                                      const SeriesPolicy& policy);
std::vector<CheckLine> check_three_term(int n, long p, long q, const TauPoint& tau, const ToleranceTable& tols,
                                        const SeriesPolicy& policy);
std::vector<CheckLine> check_eisenstein_expansion(int w, const TauPoint& tau, const ToleranceTable& tols,
                                                  const SeriesPolicy& policy);
std::vector<CheckLine> check_basis_rank(int w, int num_tau, std::uint64_t seed, const SeriesPolicy& policy);
std::vector<CheckLine> check_limit(int n, long p, long q, const std::vector<double>& heights,
                                   const ToleranceTable& tols, const SeriesPolicy& policy);

}  // namespace ellded::cli
