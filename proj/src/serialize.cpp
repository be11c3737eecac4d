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

#include "ellded/serialize.hpp"

namespace ellded {

json to_json(const Rational& r) { return r.str(); }

json to_json(const ComplexVal& v) {
  json j;
  j["re"] = v.value.real();
  j["im"] = v.value.imag();
  j["err"] = v.err;
  return j;
}

json to_json(const cplx& v) {
  json j;
  j["re"] = v.real();
  j["im"] = v.imag();
  return j;
}

namespace {

template <class Map>
json terms_to_json(const Map& terms) {
  json arr = json::array();
  for (const auto& [e, c] : terms) {
    json t;
    t["i"] = e.first;
    t["j"] = e.second;
    t["coeff"] = to_json(c);
    arr.push_back(std::move(t));
  }
  return arr;
}

}  // namespace

json to_json(const RationalLaurent& poly) { return terms_to_json(poly.terms()); }
json to_json(const std::map<Exponent, cplx>& poly) { return terms_to_json(poly); }
json to_json(const ErrLaurent& poly) { return terms_to_json(poly); }

RationalLaurent rational_laurent_from_json(const json& j) {
  RationalLaurent poly;
  for (const auto& t : j) poly.add_term(t.at("i").get<int>(), t.at("j").get<int>(), Rational::parse(t.at("coeff").get<std::string>()));
  return poly;
}

}  // namespace ellded
