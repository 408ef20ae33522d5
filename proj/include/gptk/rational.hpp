// Copyright 2026 The gptkit authors.
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

/**
 * @file
 * Exact rational scalar used throughout the toolkit.
 *
 * All core computations are tolerance-free; probabilities, coordinates and
 * certificates are arbitrary-precision rationals in canonical reduced form
 * (denominator > 0, gcd(|num|, den) = 1). GMP's mpq_class maintains the
 * canonical form; this header adds parsing and formatting.
 */

#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace gptk {

using Rat = mpq_class;
using Vec = std::vector<Rat>;
using Mat = std::vector<Vec>;

/// Shorthand for small literals: rat(2,3) == 2/3.
inline Rat rat(long num, long den = 1) {
    Rat q(num, den);
    q.canonicalize();
    return q;
}

/**
 * Parse "p/q", integer, or decimal text into an exact rational.
 *
 * Decimals are read as the exact rational of the printed digits
 * ("0.75" -> 3/4), never through floating point.
 *
 * @throws ParseError on malformed input or zero denominator.
 */
Rat rat_parse(const std::string &text);

/// Format as "p/q", or "p" when the denominator is 1.
std::string rat_str(const Rat &q);

inline double rat_double(const Rat &q) { return q.get_d(); }

} // namespace gptk
