// Copyright 2026 The tcmg Authors
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

#ifndef TCMG_RATIONAL_HPP_
#define TCMG_RATIONAL_HPP_

#include <gmpxx.h>

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace tcmg {

// Arbitrary-precision rational. GMP keeps every value canonical (gcd-reduced,
// positive denominator) after each arithmetic operation.
using Rational = mpq_class;

// Renders as "p/q" with q > 0 and gcd(p, q) = 1, including "0/1" and "1/1".
// p/q in lowest terms. Throws std::domain_error when q is 0.
Rational frac(long p, long q);

std::string to_string(const Rational& value);

// Accepts "p/q", "p" or "-p/q" with decimal integers. Throws
// std::invalid_argument on anything else, including a zero denominator.
Rational parse_rational(std::string_view text);

Rational sum(std::span<const Rational> values);

}  // namespace tcmg

#endif  // TCMG_RATIONAL_HPP_
