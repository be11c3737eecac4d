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

#include <complex>
#include <map>
#include <utility>

#include "ellded/rational.hpp"

namespace ellded {

/// Exponent pair (i, j) of the monomial p^i q^j. Negative entries allowed.
using Exponent = std::pair<int, int>;

namespace detail {

template <class T>
bool is_zero_coeff(const T& c) {
  return c == T{};
}
inline bool is_zero_coeff(const Rational& c) { return c.is_zero(); }

template <class T>
T int_power(const T& base, int e) {
  T result{1};
  T b = base;
  bool invert = e < 0;
  unsigned n = invert ? static_cast<unsigned>(-e) : static_cast<unsigned>(e);
  while (n != 0) {
    if (n & 1U) result = result * b;
    b = b * b;
    n >>= 1U;
  }
  return invert ? T{1} / result : result;
}

}  // namespace detail

/// Sparse two-variable Laurent polynomial in (p, q).
///
/// Terms live in an ordered map keyed by exponent pair, so iteration is
/// lexicographic in (i, j) and equality is structural. Zero coefficients are
/// never stored.
template <class Coeff>
class LaurentPoly {
 public:
  using TermMap = std::map<Exponent, Coeff>;

  LaurentPoly() = default;

  void add_term(int i, int j, const Coeff& c) {
    if (detail::is_zero_coeff(c)) return;
    auto [it, inserted] = terms_.try_emplace(Exponent{i, j}, c);
    if (!inserted) {
      it->second = it->second + c;
      if (detail::is_zero_coeff(it->second)) terms_.erase(it);
    }
  }

  Coeff coefficient(int i, int j) const {
    auto it = terms_.find(Exponent{i, j});
    return it == terms_.end() ? Coeff{} : it->second;
  }

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  LaurentPoly& operator+=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e.first, e.second, c);
    return *this;
  }
  LaurentPoly& operator-=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e.first, e.second, Coeff{} - c);
    return *this;
  }
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }

  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r;
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_)
        r.add_term(ea.first + eb.first, ea.second + eb.second, ca * cb);
    return r;
  }

  LaurentPoly scaled(const Coeff& s) const {
    LaurentPoly r;
    for (const auto& [e, c] : terms_) r.add_term(e.first, e.second, c * s);
    return r;
  }

  /// Evaluate at (p, q); negative exponents divide, so p and q must be
  /// nonzero whenever such a term is present.
  template <class T>
  T evaluate(const T& p, const T& q) const {
    T sum{};
    for (const auto& [e, c] : terms_)
      sum = sum + T(c) * detail::int_power(p, e.first) * detail::int_power(q, e.second);
    return sum;
  }

  /// Swap the roles of p and q.
  LaurentPoly swapped() const {
    LaurentPoly r;
    for (const auto& [e, c] : terms_) r.add_term(e.second, e.first, c);
    return r;
  }

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }

 private:
  TermMap terms_;
};

using RationalLaurent = LaurentPoly<Rational>;
using ComplexLaurent = LaurentPoly<std::complex<double>>;

/// Monomial p^i q^j with unit coefficient.
template <class Coeff>
LaurentPoly<Coeff> monomial(int i, int j, const Coeff& c = Coeff{1}) {
  LaurentPoly<Coeff> r;
  r.add_term(i, j, c);
  return r;
}

/// pq(p+q) * [g(p+q, q) + g(p, p+q) - g(p, q)], expanded exactly.
///
/// This is the three-term period relation cleared of its (p+q)^-1
/// denominators; it is the zero polynomial iff g satisfies the relation.
/// Throws ArgumentError when g has a term with exponent below -1 in either
/// variable (the multiplier pq(p+q) would not clear it).
RationalLaurent period_relation_residual(const RationalLaurent& g);

}  // namespace ellded
