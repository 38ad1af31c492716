#pragma once

#include <mpfr.h>

#include <concepts>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace feasikit {

/// Arbitrary-precision real backed by MPFR.
///
/// Every value carries its own binary precision. Arithmetic results take the
/// larger precision of their operands, so there is no process-wide default to
/// configure. Integer and double constructors are exact (64 and 53 bits);
/// anything irrational (pi, sqrt of a constant, 10^-k) is built from an
/// explicit bit count, usually via PrecisionContext.
class Scalar {
public:
    static constexpr mpfr_prec_t kExactIntBits = 64;

    Scalar();
    Scalar(int v);            // NOLINT(google-explicit-constructor)
    Scalar(long v);           // NOLINT(google-explicit-constructor)
    Scalar(long long v);      // NOLINT(google-explicit-constructor)
    Scalar(unsigned v);       // NOLINT(google-explicit-constructor)
    Scalar(unsigned long v);  // NOLINT(google-explicit-constructor)
    explicit Scalar(double v);

    Scalar(const Scalar& other);
    Scalar(Scalar&& other) noexcept;
    Scalar& operator=(const Scalar& other);
    Scalar& operator=(Scalar&& other) noexcept;
    ~Scalar();

    /// Zero at the given precision.
    static Scalar zero(mpfr_prec_t bits);
    static Scalar from_int(long v, mpfr_prec_t bits);
    /// Parses a decimal string ("0.5", "-1.25e-3", "inf") rounded to `bits`.
    static Scalar parse(std::string_view text, mpfr_prec_t bits);
    static Scalar pi(mpfr_prec_t bits);
    /// 10^exponent rounded to `bits`.
    static Scalar pow10(long exponent, mpfr_prec_t bits);
    static Scalar infinity();

    [[nodiscard]] mpfr_prec_t bits() const { return mpfr_get_prec(v_); }
    /// Copy of this value rounded to `bits`.
    [[nodiscard]] Scalar with_bits(mpfr_prec_t bits) const;

    [[nodiscard]] bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    [[nodiscard]] bool is_finite() const { return mpfr_number_p(v_) != 0; }
    [[nodiscard]] bool is_nan() const { return mpfr_nan_p(v_) != 0; }
    [[nodiscard]] int sign() const { return mpfr_sgn(v_); }

    [[nodiscard]] double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    [[nodiscard]] long to_long() const { return mpfr_get_si(v_, MPFR_RNDN); }

    /// Decimal scientific notation with `digits` significant digits
    /// (0 means: enough digits to round-trip this value's precision).
    [[nodiscard]] std::string to_string(int digits = 0) const;

    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);

    friend Scalar operator-(const Scalar& a);
    friend Scalar operator+(const Scalar& a, const Scalar& b);
    friend Scalar operator-(const Scalar& a, const Scalar& b);
    friend Scalar operator*(const Scalar& a, const Scalar& b);
    friend Scalar operator/(const Scalar& a, const Scalar& b);

    friend Scalar operator*(const Scalar& a, long k);
    friend Scalar operator*(long k, const Scalar& a);
    friend Scalar operator/(const Scalar& a, long k);
    friend Scalar operator+(const Scalar& a, long k);
    friend Scalar operator+(long k, const Scalar& a);
    friend Scalar operator-(const Scalar& a, long k);
    friend Scalar operator-(long k, const Scalar& a);
    friend Scalar operator/(long k, const Scalar& a);

    friend int compare(const Scalar& a, const Scalar& b) { return mpfr_cmp(a.v_, b.v_); }
    friend int compare(const Scalar& a, long k) { return mpfr_cmp_si(a.v_, k); }

    friend Scalar sqrt(const Scalar& a);
    friend Scalar abs(const Scalar& a);
    friend Scalar sin(const Scalar& a);
    friend Scalar cos(const Scalar& a);
    friend Scalar atan2(const Scalar& y, const Scalar& x);
    friend Scalar log(const Scalar& a);
    friend Scalar log10(const Scalar& a);
    friend Scalar exp(const Scalar& a);
    friend Scalar hypot(const Scalar& a, const Scalar& b);

    [[nodiscard]] mpfr_srcptr raw() const { return v_; }

private:
    explicit Scalar(mpfr_prec_t bits, int /*tag*/);

    mpfr_t v_;
};

// Literal integer operands of any width route through the long overloads.
template <std::integral I>
    requires(!std::same_as<I, long>)
Scalar operator*(const Scalar& a, I k) { return a * static_cast<long>(k); }
template <std::integral I>
    requires(!std::same_as<I, long>)
Scalar operator*(I k, const Scalar& a) { return static_cast<long>(k) * a; }
template <std::integral I>
    requires(!std::same_as<I, long>)
Scalar operator/(const Scalar& a, I k) { return a / static_cast<long>(k); }
template <std::integral I>
    requires(!std::same_as<I, long>)
Scalar operator/(I k, const Scalar& a) { return static_cast<long>(k) / a; }
template <std::integral I>
    requires(!std::same_as<I, long>)
Scalar operator+(const Scalar& a, I k) { return a + static_cast<long>(k); }
template <std::integral I>
    requires(!std::same_as<I, long>)
Scalar operator+(I k, const Scalar& a) { return static_cast<long>(k) + a; }
template <std::integral I>
    requires(!std::same_as<I, long>)
Scalar operator-(const Scalar& a, I k) { return a - static_cast<long>(k); }
template <std::integral I>
    requires(!std::same_as<I, long>)
Scalar operator-(I k, const Scalar& a) { return static_cast<long>(k) - a; }

inline bool operator==(const Scalar& a, const Scalar& b) { return mpfr_equal_p(a.raw(), b.raw()) != 0; }
inline bool operator<(const Scalar& a, const Scalar& b) { return mpfr_less_p(a.raw(), b.raw()) != 0; }
inline bool operator<=(const Scalar& a, const Scalar& b) { return mpfr_lessequal_p(a.raw(), b.raw()) != 0; }
inline bool operator>(const Scalar& a, const Scalar& b) { return mpfr_greater_p(a.raw(), b.raw()) != 0; }
inline bool operator>=(const Scalar& a, const Scalar& b) { return mpfr_greaterequal_p(a.raw(), b.raw()) != 0; }

template <std::integral I>
bool operator==(const Scalar& a, I k) { return !a.is_nan() && compare(a, static_cast<long>(k)) == 0; }
template <std::integral I>
bool operator<(const Scalar& a, I k) { return !a.is_nan() && compare(a, static_cast<long>(k)) < 0; }
template <std::integral I>
bool operator<=(const Scalar& a, I k) { return !a.is_nan() && compare(a, static_cast<long>(k)) <= 0; }
template <std::integral I>
bool operator>(const Scalar& a, I k) { return !a.is_nan() && compare(a, static_cast<long>(k)) > 0; }
template <std::integral I>
bool operator>=(const Scalar& a, I k) { return !a.is_nan() && compare(a, static_cast<long>(k)) >= 0; }

Scalar max(const Scalar& a, const Scalar& b);
Scalar min(const Scalar& a, const Scalar& b);
Scalar square(const Scalar& a);

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace feasikit
