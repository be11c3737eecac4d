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

#include <map>

#include <json.hpp>

#include "ellded/laurent.hpp"
#include "ellded/qseries.hpp"
#include "ellded/rational.hpp"
#include "ellded/symbols.hpp"

namespace ellded {

using json = nlohmann::ordered_json;

/// "num/den".
json to_json(const Rational& r);
/// {"re": .., "im": .., "err": ..}.
json to_json(const ComplexVal& v);
/// {"re": .., "im": ..}.
json to_json(const cplx& v);
/// [{"i": .., "j": .., "coeff": "num/den"}, ...] in lexicographic (i, j) order.
json to_json(const RationalLaurent& poly);
/// Same layout with {"re", "im"} coefficients.
json to_json(const std::map<Exponent, cplx>& poly);
/// Same layout with {"re", "im", "err"} coefficients.
json to_json(const ErrLaurent& poly);

RationalLaurent rational_laurent_from_json(const json& j);

}  // namespace ellded
