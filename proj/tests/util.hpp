// Copyright 2026 The knpoly Authors
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

#include <doctest.h>

#include <map>
#include <ostream>
#include <string>

#include "knpoly/bigint.hpp"
#include "knpoly/laurent.hpp"

namespace knpoly {
// doctest prints operands of failed comparisons through operator<<
inline std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.get_str(); }
}  // namespace knpoly

namespace testutil {

using knpoly::BigInt;
using knpoly::LaurentPoly;

inline LaurentPoly X() { return LaurentPoly::variable("X"); }
inline LaurentPoly Y() { return LaurentPoly::variable("Y"); }
inline LaurentPoly Z() { return LaurentPoly::variable("Z"); }

inline BigInt big(const char* digits) { return BigInt(digits); }

inline BigInt at(const LaurentPoly& p, long x, long y = 0, long z = 0) {
  return knpoly::poly_eval_integer(p, {{"X", x}, {"Y", y}, {"Z", z}});
}

}  // namespace testutil
