#include "ifsx/rat.hpp"

#include <cctype>
#include <cmath>
#include <ostream>
#include <stdexcept>

namespace ifsx {

Rat::Rat(long num, long den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    mpq_init(q_);
    mpq_set_si(q_, num, 1);
    mpq_t d;
    mpq_init(d);
    mpq_set_si(d, den, 1);
    mpq_div(q_, q_, d);
    mpq_clear(d);
}

std::optional<Rat> Rat::parse(std::string_view text) {
    // Strict shape check before handing to GMP: -?digits(/digits)?
    if (text.empty()) return std::nullopt;
    std::size_t i = 0;
    if (text[i] == '-') ++i;
    std::size_t digits = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        ++i;
        ++digits;
    }
    if (digits == 0) return std::nullopt;
    if (i < text.size()) {
        if (text[i] != '/') return std::nullopt;
        ++i;
        std::size_t den_digits = 0;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            ++i;
            ++den_digits;
        }
        if (den_digits == 0 || i != text.size()) return std::nullopt;
    }
    Rat r;
    const std::string owned(text);
    if (mpq_set_str(r.q_, owned.c_str(), 10) != 0) return std::nullopt;
    if (mpz_sgn(mpq_denref(r.q_)) == 0) return std::nullopt;
    mpq_canonicalize(r.q_);
    return r;
}

Rat Rat::from_double(double x) {
    if (!std::isfinite(x)) throw std::domain_error("non-finite double");
    Rat r;
    mpq_set_d(r.q_, x);
    return r;
}

Rat Rat::operator+(const Rat& o) const {
    Rat r;
    mpq_add(r.q_, q_, o.q_);
    return r;
}

Rat Rat::operator-(const Rat& o) const {
    Rat r;
    mpq_sub(r.q_, q_, o.q_);
    return r;
}

Rat Rat::operator*(const Rat& o) const {
    Rat r;
    mpq_mul(r.q_, q_, o.q_);
    return r;
}

Rat Rat::operator/(const Rat& o) const {
    if (o.is_zero()) throw std::domain_error("rational division by zero");
    Rat r;
    mpq_div(r.q_, q_, o.q_);
    return r;
}

Rat Rat::operator-() const {
    Rat r;
    mpq_neg(r.q_, q_);
    return r;
}

Rat Rat::abs() const {
    Rat r;
    mpq_abs(r.q_, q_);
    return r;
}

Rat Rat::reciprocal() const {
    if (is_zero()) throw std::domain_error("reciprocal of zero");
    Rat r;
    mpq_inv(r.q_, q_);
    return r;
}

Rat Rat::pow_int(long e) const {
    if (e == 0) return Rat(1);
    if (e < 0) return reciprocal().pow_int(-e);
    Rat r;
    mpz_pow_ui(mpq_numref(r.q_), mpq_numref(q_), static_cast<unsigned long>(e));
    mpz_pow_ui(mpq_denref(r.q_), mpq_denref(q_), static_cast<unsigned long>(e));
    // num/den were already coprime, so their powers are too.
    return r;
}

std::optional<Rat> Rat::sqrt_exact() const {
    if (sign() < 0) return std::nullopt;
    if (is_zero()) return Rat(0);
    if (!mpz_perfect_square_p(mpq_numref(q_)) || !mpz_perfect_square_p(mpq_denref(q_)))
        return std::nullopt;
    Rat r;
    mpz_sqrt(mpq_numref(r.q_), mpq_numref(q_));
    mpz_sqrt(mpq_denref(r.q_), mpq_denref(q_));
    return r;
}

std::string Rat::str() const {
    char* s = mpq_get_str(nullptr, 10, q_);
    std::string out(s);
    void (*freefn)(void*, size_t);
    mp_get_memory_functions(nullptr, nullptr, &freefn);
    freefn(s, out.size() + 1);
    return out;
}

static std::string mpz_str(mpz_srcptr z) {
    char* s = mpz_get_str(nullptr, 10, z);
    std::string out(s);
    void (*freefn)(void*, size_t);
    mp_get_memory_functions(nullptr, nullptr, &freefn);
    freefn(s, out.size() + 1);
    return out;
}

std::string Rat::num_str() const { return mpz_str(mpq_numref(q_)); }
std::string Rat::den_str() const { return mpz_str(mpq_denref(q_)); }

std::string Rat::decimal(int frac_digits) const {
    if (frac_digits < 0) frac_digits = 0;
    // floor(x * 10^k), then re-insert the point.
    mpz_t scaled, pow10;
    mpz_init(scaled);
    mpz_init(pow10);
    mpz_ui_pow_ui(pow10, 10, static_cast<unsigned long>(frac_digits));
    mpz_mul(scaled, mpq_numref(q_), pow10);
    mpz_fdiv_q(scaled, scaled, mpq_denref(q_));
    const bool neg = mpz_sgn(scaled) < 0;
    mpz_abs(scaled, scaled);
    std::string digits = mpz_str(scaled);
    mpz_clear(scaled);
    mpz_clear(pow10);
    if (static_cast<int>(digits.size()) <= frac_digits)
        digits.insert(0, static_cast<std::size_t>(frac_digits) + 1 - digits.size(), '0');
    std::string out = neg ? "-" : "";
    out += digits.substr(0, digits.size() - static_cast<std::size_t>(frac_digits));
    if (frac_digits > 0) {
        out += '.';
        out += digits.substr(digits.size() - static_cast<std::size_t>(frac_digits));
    }
    return out;
}

Rat min(const Rat& a, const Rat& b) { return a <= b ? a : b; }
Rat max(const Rat& a, const Rat& b) { return a >= b ? a : b; }

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

} // namespace ifsx
