// Copyright 2026 The bwc Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace bwc {

// Every quantity in the math core is an exact arbitrary-precision
// rational. Floating point appears only at SVG render time.
using Int = mpz_class;
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline Rat ratio(const Int& num, const Int& den) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

// Renders in lowest terms as "p/q"; integers render without "/1".
std::string rat_str(const Rat& r);

// Accepts an optionally signed integer or "p/q" fraction. Decimal
// literals are rejected so exactness is never silently lost.
// Throws InvalidInput on malformed text.
Rat rat_parse(std::string_view text);

// Exact square root when the argument is the square of a rational.
std::optional<Rat> exact_sqrt(const Rat& r);

} // namespace bwc
