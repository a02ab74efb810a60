#include "ifsx/scalar.hpp"

#include <ostream>
#include <stdexcept>

namespace ifsx {

Scalar Scalar::range(Rat lo, Rat hi) {
    if (lo > hi) throw std::domain_error("scalar range with lo > hi");
    Scalar s;
    s.lo_ = std::move(lo);
    s.hi_ = std::move(hi);
    return s;
}

Scalar Scalar::operator+(const Scalar& o) const {
    Scalar r;
    r.lo_ = lo_ + o.lo_;
    r.hi_ = hi_ + o.hi_;
    return r;
}

Scalar Scalar::operator-(const Scalar& o) const {
    Scalar r;
    r.lo_ = lo_ - o.hi_;
    r.hi_ = hi_ - o.lo_;
    return r;
}

Scalar Scalar::operator*(const Scalar& o) const {
    if (is_exact() && o.is_exact()) return exact(lo_ * o.lo_);
    const Rat a = lo_ * o.lo_;
    const Rat b = lo_ * o.hi_;
    const Rat c = hi_ * o.lo_;
    const Rat d = hi_ * o.hi_;
    Scalar r;
    r.lo_ = ifsx::min(ifsx::min(a, b), ifsx::min(c, d));
    r.hi_ = ifsx::max(ifsx::max(a, b), ifsx::max(c, d));
    return r;
}

Scalar Scalar::operator/(const Scalar& o) const {
    if (o.lo_.sign() <= 0 && o.hi_.sign() >= 0)
        throw std::domain_error("scalar division by a range containing zero");
    if (is_exact() && o.is_exact()) return exact(lo_ / o.lo_);
    // Reciprocal of a sign-definite range is [1/hi, 1/lo] for either sign.
    Scalar recip;
    recip.lo_ = o.hi_.reciprocal();
    recip.hi_ = o.lo_.reciprocal();
    return *this * recip;
}

Scalar Scalar::operator-() const {
    Scalar r;
    r.lo_ = -hi_;
    r.hi_ = -lo_;
    return r;
}

Scalar Scalar::abs() const {
    if (lo_.sign() >= 0) return *this;
    if (hi_.sign() <= 0) return -*this;
    Scalar r;
    r.lo_ = Rat(0);
    r.hi_ = ifsx::max(-lo_, hi_);
    return r;
}

Scalar Scalar::pow_int(long e) const {
    if (e == 0) return exact(Rat(1));
    if (is_exact()) return exact(lo_.pow_int(e));
    if (e < 0) return exact(Rat(1)) / pow_int(-e);
    Scalar acc = exact(Rat(1));
    Scalar base = *this;
    long k = e;
    while (k > 0) { // interval square-and-multiply; exact on sign-definite ranges
        if (k & 1) acc = acc * base;
        base = base * base;
        k >>= 1;
    }
    return acc;
}

Cmp Scalar::sign_class() const {
    if (certainly_positive()) return Cmp::greater;
    if (certainly_negative()) return Cmp::less;
    if (is_exact_zero()) return Cmp::equal;
    return Cmp::unknown;
}

Scalar Scalar::round_out_double() const {
    Scalar r;
    r.lo_ = Rat::from_double(enclose::double_below(lo_));
    r.hi_ = Rat::from_double(enclose::double_above(hi_));
    return r;
}

std::string Scalar::str() const {
    if (is_exact()) return lo_.str();
    return "[" + lo_.decimal(12) + " ~ " + hi_.decimal(12) + "]";
}

Cmp cmp(const Scalar& a, const Scalar& b) {
    if (a.hi() < b.lo()) return Cmp::less;
    if (a.lo() > b.hi()) return Cmp::greater;
    if (a.is_exact() && b.is_exact()) return Cmp::equal; // overlap of two points
    return Cmp::unknown;
}

Scalar min(const Scalar& a, const Scalar& b) {
    return Scalar::range(ifsx::min(a.lo(), b.lo()), ifsx::min(a.hi(), b.hi()));
}

Scalar max(const Scalar& a, const Scalar& b) {
    return Scalar::range(ifsx::max(a.lo(), b.lo()), ifsx::max(a.hi(), b.hi()));
}

Scalar sqrt_scalar(const Scalar& x, unsigned prec_bits) {
    if (x.hi().sign() < 0) throw std::domain_error("sqrt of a negative scalar");
    const Rat lo_in = x.lo().sign() < 0 ? Rat(0) : x.lo();
    if (x.is_exact()) return Scalar::from_range(enclose::sqrt_range(lo_in, prec_bits));
    const auto lo_rng = enclose::sqrt_range(lo_in, prec_bits);
    const auto hi_rng = enclose::sqrt_range(x.hi(), prec_bits);
    return Scalar::range(lo_rng.lo, hi_rng.hi);
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

} // namespace ifsx
