#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "exobasis/errors.hpp"

namespace exobasis {

// Arbitrary-precision rational. GMP keeps values canonical (reduced,
// positive denominator) and cannot overflow, which is what the exact
// residue and measure arithmetic here relies on.
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
    if (den == 0) throw InputError("rational with zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

/// Parses "p/q" or "p" with arbitrary-precision integers.
Rat rat_parse(const std::string& text);

/// Formats as "p" when integral, "p/q" otherwise.
std::string rat_str(const Rat& q);

inline double rat_d(const Rat& q) { return q.get_d(); }

} // namespace exobasis
