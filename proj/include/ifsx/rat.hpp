#pragma once

#include <gmp.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

namespace ifsx {

// Arbitrary-precision rational number, always kept canonical (fully reduced,
// positive denominator).  Thin value-semantics wrapper over GMP's mpq_t; all
// arithmetic is exact.
class Rat {
public:
    Rat() { mpq_init(q_); }
    Rat(long n) { // NOLINT(google-explicit-constructor) — integer literals read naturally
        mpq_init(q_);
        mpq_set_si(q_, n, 1);
    }
    Rat(long num, long den);

    Rat(const Rat& o) {
        mpq_init(q_);
        mpq_set(q_, o.q_);
    }
    Rat(Rat&& o) noexcept {
        mpq_init(q_);
        mpq_swap(q_, o.q_);
    }
    Rat& operator=(const Rat& o) {
        if (this != &o) mpq_set(q_, o.q_);
        return *this;
    }
    Rat& operator=(Rat&& o) noexcept {
        mpq_swap(q_, o.q_);
        return *this;
    }
    ~Rat() { mpq_clear(q_); }

    // Accepts canonical text: an optional '-', digits, optionally "/digits"
    // with a nonzero denominator.  Anything else yields nullopt.
    static std::optional<Rat> parse(std::string_view text);

    // Exact value of a finite double (doubles are dyadic rationals).
    static Rat from_double(double x);

    Rat operator+(const Rat& o) const;
    Rat operator-(const Rat& o) const;
    Rat operator*(const Rat& o) const;
    Rat operator/(const Rat& o) const; // throws std::domain_error on /0
    Rat operator-() const;

    Rat& operator+=(const Rat& o) { return *this = *this + o; }
    Rat& operator-=(const Rat& o) { return *this = *this - o; }
    Rat& operator*=(const Rat& o) { return *this = *this * o; }
    Rat& operator/=(const Rat& o) { return *this = *this / o; }

    bool operator==(const Rat& o) const { return mpq_equal(q_, o.q_) != 0; }
    std::strong_ordering operator<=>(const Rat& o) const {
        const int c = mpq_cmp(q_, o.q_);
        if (c < 0) return std::strong_ordering::less;
        if (c > 0) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    int sign() const { return mpq_sgn(q_); }
    bool is_zero() const { return sign() == 0; }
    bool is_integer() const { return mpz_cmp_ui(mpq_denref(q_), 1) == 0; }

    Rat abs() const;
    Rat reciprocal() const; // throws std::domain_error on 0

    // Integer power; negative exponents require a nonzero base.
    Rat pow_int(long e) const;

    // Exact square root when this is a perfect square of a rational, else nullopt.
    std::optional<Rat> sqrt_exact() const;

    // "p/q", or "p" when the denominator is 1.
    std::string str() const;
    std::string num_str() const;
    std::string den_str() const;

    // Fixed-point decimal with `frac_digits` digits after the point, rounded
    // toward -inf (deterministic across platforms; used for rendering).
    std::string decimal(int frac_digits) const;

    double to_double() const { return mpq_get_d(q_); }

    // Raw handle for interop with mpfr_set_q / mpfr_get_q.  The value must be
    // left canonical by any caller that writes through it.
    mpq_ptr raw() { return q_; }
    mpq_srcptr raw() const { return q_; }

private:
    mpq_t q_;
};

Rat min(const Rat& a, const Rat& b);
Rat max(const Rat& a, const Rat& b);

std::ostream& operator<<(std::ostream& os, const Rat& r);

} // namespace ifsx
