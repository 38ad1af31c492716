#include "feasikit/numerics/scalar.hpp"

#include <algorithm>
#include <cstdlib>
#include <ostream>
#include <stdexcept>
#include <utility>

namespace feasikit {

namespace {

mpfr_prec_t wider(const Scalar& a, const Scalar& b) { return std::max(a.bits(), b.bits()); }

}  // namespace

Scalar::Scalar(mpfr_prec_t bits, int /*tag*/) { mpfr_init2(v_, bits); }

Scalar::Scalar() : Scalar(kExactIntBits, 0) { mpfr_set_zero(v_, 1); }
Scalar::Scalar(int v) : Scalar(kExactIntBits, 0) { mpfr_set_si(v_, v, MPFR_RNDN); }
Scalar::Scalar(long v) : Scalar(kExactIntBits, 0) { mpfr_set_si(v_, v, MPFR_RNDN); }
Scalar::Scalar(long long v) : Scalar(kExactIntBits, 0) { mpfr_set_si(v_, static_cast<long>(v), MPFR_RNDN); }
Scalar::Scalar(unsigned v) : Scalar(kExactIntBits, 0) { mpfr_set_ui(v_, v, MPFR_RNDN); }
Scalar::Scalar(unsigned long v) : Scalar(kExactIntBits, 0) { mpfr_set_ui(v_, v, MPFR_RNDN); }
Scalar::Scalar(double v) : Scalar(53, 0) { mpfr_set_d(v_, v, MPFR_RNDN); }

Scalar::Scalar(const Scalar& other) : Scalar(other.bits(), 0) { mpfr_set(v_, other.v_, MPFR_RNDN); }

Scalar::Scalar(Scalar&& other) noexcept : Scalar(mpfr_get_prec(other.v_), 0) { mpfr_swap(v_, other.v_); }

Scalar& Scalar::operator=(const Scalar& other) {
    if (this != &other) {
        mpfr_set_prec(v_, other.bits());
        mpfr_set(v_, other.v_, MPFR_RNDN);
    }
    return *this;
}

Scalar& Scalar::operator=(Scalar&& other) noexcept {
    mpfr_swap(v_, other.v_);
    return *this;
}

Scalar::~Scalar() { mpfr_clear(v_); }

Scalar Scalar::zero(mpfr_prec_t bits) {
    Scalar r(bits, 0);
    mpfr_set_zero(r.v_, 1);
    return r;
}

Scalar Scalar::from_int(long v, mpfr_prec_t bits) {
    Scalar r(bits, 0);
    mpfr_set_si(r.v_, v, MPFR_RNDN);
    return r;
}

Scalar Scalar::parse(std::string_view text, mpfr_prec_t bits) {
    Scalar r(bits, 0);
    std::string buf(text);
    char* end = nullptr;
    if (!buf.empty()) mpfr_strtofr(r.v_, buf.c_str(), &end, 10, MPFR_RNDN);
    if (end == nullptr || end == buf.c_str() || *end != '\0') {
        throw std::invalid_argument("not a decimal number: '" + buf + "'");
    }
    return r;
}

Scalar Scalar::pi(mpfr_prec_t bits) {
    Scalar r(bits, 0);
    mpfr_const_pi(r.v_, MPFR_RNDN);
    return r;
}

Scalar Scalar::pow10(long exponent, mpfr_prec_t bits) {
    Scalar r(bits, 0);
    mpfr_set_si(r.v_, 10, MPFR_RNDN);
    mpfr_pow_si(r.v_, r.v_, exponent, MPFR_RNDN);
    return r;
}

Scalar Scalar::infinity() {
    Scalar r(kExactIntBits, 0);
    mpfr_set_inf(r.v_, 1);
    return r;
}

Scalar Scalar::with_bits(mpfr_prec_t bits) const {
    Scalar r(bits, 0);
    mpfr_set(r.v_, v_, MPFR_RNDN);
    return r;
}

std::string Scalar::to_string(int digits) const {
    if (is_nan()) return "nan";
    if (mpfr_inf_p(v_)) return sign() < 0 ? "-inf" : "inf";
    if (is_zero()) return "0";
    mpfr_exp_t exp10 = 0;
    char* raw = mpfr_get_str(nullptr, &exp10, 10, static_cast<size_t>(std::max(digits, 0)), v_, MPFR_RNDN);
    std::string mant(raw);
    mpfr_free_str(raw);
    std::string out;
    if (mant.front() == '-') {
        out.push_back('-');
        mant.erase(mant.begin());
    }
    // Strip trailing zeros so equal values print identically regardless of precision.
    while (mant.size() > 1 && mant.back() == '0') mant.pop_back();
    out.push_back(mant.front());
    if (mant.size() > 1) {
        out.push_back('.');
        out.append(mant, 1, std::string::npos);
    }
    const long e = static_cast<long>(exp10) - 1;
    if (e != 0) {
        out.push_back('e');
        out.append(std::to_string(e));
    }
    return out;
}

Scalar& Scalar::operator+=(const Scalar& o) { return *this = *this + o; }
Scalar& Scalar::operator-=(const Scalar& o) { return *this = *this - o; }
Scalar& Scalar::operator*=(const Scalar& o) { return *this = *this * o; }
Scalar& Scalar::operator/=(const Scalar& o) { return *this = *this / o; }

Scalar operator-(const Scalar& a) {
    Scalar r(a.bits(), 0);
    mpfr_neg(r.v_, a.v_, MPFR_RNDN);
    return r;
}

Scalar operator+(const Scalar& a, const Scalar& b) {
    Scalar r(wider(a, b), 0);
    mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
}

Scalar operator-(const Scalar& a, const Scalar& b) {
    Scalar r(wider(a, b), 0);
    mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
}

Scalar operator*(const Scalar& a, const Scalar& b) {
    Scalar r(wider(a, b), 0);
    mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
}

Scalar operator/(const Scalar& a, const Scalar& b) {
    Scalar r(wider(a, b), 0);
    mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
}

Scalar operator*(const Scalar& a, long k) {
    Scalar r(a.bits(), 0);
    mpfr_mul_si(r.v_, a.v_, k, MPFR_RNDN);
    return r;
}

Scalar operator*(long k, const Scalar& a) { return a * k; }

Scalar operator/(const Scalar& a, long k) {
    Scalar r(a.bits(), 0);
    mpfr_div_si(r.v_, a.v_, k, MPFR_RNDN);
    return r;
}

Scalar operator+(const Scalar& a, long k) {
    Scalar r(a.bits(), 0);
    mpfr_add_si(r.v_, a.v_, k, MPFR_RNDN);
    return r;
}

Scalar operator+(long k, const Scalar& a) { return a + k; }

Scalar operator-(const Scalar& a, long k) {
    Scalar r(a.bits(), 0);
    mpfr_sub_si(r.v_, a.v_, k, MPFR_RNDN);
    return r;
}

Scalar operator-(long k, const Scalar& a) {
    Scalar r(a.bits(), 0);
    mpfr_si_sub(r.v_, k, a.v_, MPFR_RNDN);
    return r;
}

Scalar operator/(long k, const Scalar& a) {
    Scalar r(a.bits(), 0);
    mpfr_si_div(r.v_, k, a.v_, MPFR_RNDN);
    return r;
}

Scalar sqrt(const Scalar& a) {
    Scalar r(a.bits(), 0);
    mpfr_sqrt(r.v_, a.v_, MPFR_RNDN);
    return r;
}

Scalar abs(const Scalar& a) {
    Scalar r(a.bits(), 0);
    mpfr_abs(r.v_, a.v_, MPFR_RNDN);
    return r;
}

Scalar sin(const Scalar& a) {
    Scalar r(a.bits(), 0);
    mpfr_sin(r.v_, a.v_, MPFR_RNDN);
    return r;
}

Scalar cos(const Scalar& a) {
    Scalar r(a.bits(), 0);
    mpfr_cos(r.v_, a.v_, MPFR_RNDN);
    return r;
}

Scalar atan2(const Scalar& y, const Scalar& x) {
    Scalar r(wider(y, x), 0);
    mpfr_atan2(r.v_, y.v_, x.v_, MPFR_RNDN);
    return r;
}

Scalar log(const Scalar& a) {
    Scalar r(a.bits(), 0);
    mpfr_log(r.v_, a.v_, MPFR_RNDN);
    return r;
}

Scalar log10(const Scalar& a) {
    Scalar r(a.bits(), 0);
    mpfr_log10(r.v_, a.v_, MPFR_RNDN);
    return r;
}

Scalar exp(const Scalar& a) {
    Scalar r(a.bits(), 0);
    mpfr_exp(r.v_, a.v_, MPFR_RNDN);
    return r;
}

Scalar hypot(const Scalar& a, const Scalar& b) {
    Scalar r(wider(a, b), 0);
    mpfr_hypot(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
}

Scalar max(const Scalar& a, const Scalar& b) { return a < b ? b : a; }
Scalar min(const Scalar& a, const Scalar& b) { return b < a ? b : a; }
Scalar square(const Scalar& a) { return a * a; }

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

}  // namespace feasikit
