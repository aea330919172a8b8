// Copyright 2026 The rsgeq Authors
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

#include <string>

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>

namespace rsgeq {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::rational<Int>;

// Parses "42", "-3/7" or "2.125" into an exact rational. Decimal notation is
// expanded over a power-of-ten denominator, never rounded.
Rational parse_rational(const std::string& text);

// Inverse of parse_rational: "p" when the denominator is 1, else "p/q".
std::string format_rational(const Rational& value);

inline Rational rat(long long v) { return Rational(Int(v)); }
inline Rational rat(long long num, long long den) {
  return Rational(Int(num), Int(den));
}

}  // namespace rsgeq
