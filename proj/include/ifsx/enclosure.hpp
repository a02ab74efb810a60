#pragma once

#include "ifsx/rat.hpp"

#include <vector>

namespace ifsx::enclose {

// A closed interval [lo, hi] with exact rational endpoints, guaranteed to
// contain the mathematical value being approximated.  All functions here
// produce endpoints via MPFR directed rounding pulled back to exact dyadic
// rationals, so no additional slack is introduced beyond the working-precision
// ulp.
struct RatRange {
    Rat lo, hi;
};

// sqrt(x) for x >= 0.  Exact (degenerate range) when x is a perfect square.
RatRange sqrt_range(const Rat& x, unsigned prec_bits = 128);

// Natural logarithm, x > 0.
RatRange log_range(const Rat& x, unsigned prec_bits = 128);

// base^e for base > 0 and a rational exponent range [elo, ehi].
// No monotonicity assumptions: all rounding corners are evaluated.
RatRange pow_range(const Rat& base, const Rat& elo, const Rat& ehi,
                   unsigned prec_bits = 128);

// The unique s > 0 with sum_i ratios[i]^s = 1, for ratios in (0,1), at least
// two of them.  Bisection with certified sign tests at adaptive precision;
// the result width is at most `width` except in the (not observed) event that
// a sign test stays undecidable at maximum precision, in which case the
// honest wider bracket is returned.
RatRange dimension_range(const std::vector<Rat>& ratios, const Rat& width);

// Largest double <= x and smallest double >= x (for outward rounding of
// interval-mode scalars to double-representable endpoints).
double double_below(const Rat& x);
double double_above(const Rat& x);

} // namespace ifsx::enclose
