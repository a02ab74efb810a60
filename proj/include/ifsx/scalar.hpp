#pragma once

#include "ifsx/enclosure.hpp"
#include "ifsx/rat.hpp"

#include <iosfwd>
#include <string>

namespace ifsx {

// Outcome of a certified comparison.  `unknown` means the enclosures overlap
// without being a single exact value — no order can be certified.
enum class Cmp { less, equal, greater, unknown };

// A certified real value: a closed interval [lo, hi] with exact rational
// endpoints that is guaranteed to contain the true value.  lo == hi means the
// value is known exactly.  Rational endpoint arithmetic is itself exact, so
// interval operations introduce no rounding slack; `round_out_double` widens
// endpoints to the nearest doubles when a bounded representation is wanted
// (interval-mode system data).
class Scalar {
public:
    Scalar() : lo_(0), hi_(0) {}

    static Scalar exact(Rat v) {
        Scalar s;
        s.lo_ = v;
        s.hi_ = std::move(v);
        return s;
    }
    static Scalar range(Rat lo, Rat hi);
    static Scalar from_range(const enclose::RatRange& r) { return range(r.lo, r.hi); }

    const Rat& lo() const { return lo_; }
    const Rat& hi() const { return hi_; }
    bool is_exact() const { return lo_ == hi_; }
    // The exact value; callers must check is_exact() first.
    const Rat& value() const { return lo_; }
    Rat width() const { return hi_ - lo_; }
    // Midpoint as double, for display only.
    double approx() const { return ((lo_ + hi_) / Rat(2)).to_double(); }

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    // Certified division: the divisor must exclude zero (throws std::domain_error).
    Scalar operator/(const Scalar& o) const;
    Scalar operator-() const;

    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
    Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

    Scalar abs() const;
    Scalar pow_int(long e) const; // for negative e the range must exclude 0

    // -1 / 0 / +1 when certified (0 only for the exact zero); unknown otherwise.
    Cmp sign_class() const;
    bool certainly_positive() const { return lo_.sign() > 0; }
    bool certainly_negative() const { return hi_.sign() < 0; }
    bool is_exact_zero() const { return is_exact() && lo_.is_zero(); }

    // Widen endpoints outward to the nearest representable doubles.
    Scalar round_out_double() const;

    // True when the ranges intersect (the values could be equal).
    bool overlaps(const Scalar& o) const { return !(hi_ < o.lo_ || o.hi_ < lo_); }

    std::string str() const; // "p/q" or "[lo ~ hi]"

private:
    Rat lo_, hi_;
};

// Certified order between two scalars.
Cmp cmp(const Scalar& a, const Scalar& b);

Scalar min(const Scalar& a, const Scalar& b); // range-wise min
Scalar max(const Scalar& a, const Scalar& b); // range-wise max

// Certified square root (exact when the value is an exact perfect square).
// Ranges dipping below zero from enclosure slack are clamped at 0.
Scalar sqrt_scalar(const Scalar& x, unsigned prec_bits = 128);

std::ostream& operator<<(std::ostream& os, const Scalar& s);

} // namespace ifsx
