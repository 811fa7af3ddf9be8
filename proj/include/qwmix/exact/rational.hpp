// Copyright 2026 The qwmix Authors
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

#ifndef QWMIX_EXACT_RATIONAL_HPP
#define QWMIX_EXACT_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace qwmix::exact {

// GMP keeps mpq_class canonical after every arithmetic operation: the
// fraction is reduced and the denominator is positive.
using Integer = mpz_class;
using Rational = mpq_class;

/// Canonical text form: "p/q" reduced with q > 0, or "p" when q = 1.
std::string to_string(const Rational& r);

/// Parses "p", "-p" or "p/q". Throws DomainError on malformed text or a
/// zero denominator. The result is canonicalized.
Rational parse_rational(std::string_view text);

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

Integer lcm(const Integer& a, const Integer& b);

}  // namespace qwmix::exact

#endif  // QWMIX_EXACT_RATIONAL_HPP
