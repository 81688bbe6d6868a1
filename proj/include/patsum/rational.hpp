// Copyright 2026 The Authors.
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

#include <boost/rational.hpp>
#include <cctype>
#include <cstdint>
#include <string>
#include <string_view>

#include "patsum/common.hpp"

namespace patsum {

// Exact rational used for supports, frequencies and rule accuracies.
using Rat = boost::rational<std::int64_t>;

inline double to_double(const Rat& r) {
  return static_cast<double>(r.numerator()) /
         static_cast<double>(r.denominator());
}

inline std::string to_string(const Rat& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

// Accepts "p/q", integers and plain decimals ("0.25" becomes 25/100 exactly).
inline Rat parse_rational(std::string_view text) {
  const std::string s(text);
  auto bad = [&] { return PreconditionError("not a rational: '" + s + "'"); };
  if (s.empty()) throw bad();
  if (auto slash = s.find('/'); slash != std::string::npos) {
    try {
      std::int64_t num = std::stoll(s.substr(0, slash));
      std::int64_t den = std::stoll(s.substr(slash + 1));
      if (den == 0) throw bad();
      return Rat(num, den);
    } catch (const std::logic_error&) {
      throw bad();
    }
  }
  std::size_t dot = s.find('.');
  std::string digits = dot == std::string::npos
                           ? s
                           : s.substr(0, dot) + s.substr(dot + 1);
  if (digits.empty() || digits == "-" || digits == "+") throw bad();
  std::size_t start = (digits[0] == '-' || digits[0] == '+') ? 1 : 0;
  if (start == digits.size()) throw bad();
  for (std::size_t i = start; i < digits.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(digits[i]))) throw bad();
  std::int64_t den = 1;
  if (dot != std::string::npos)
    for (std::size_t i = dot + 1; i < s.size(); ++i) den *= 10;
  try {
    return Rat(std::stoll(digits), den);
  } catch (const std::logic_error&) {
    throw bad();
  }
}

}  // namespace patsum
