#pragma once

#include "feasikit/numerics/scalar.hpp"

#include <stdexcept>

namespace feasikit {

/// Working precision and the tolerances derived from it.
///
/// Passed explicitly to every operation that needs to create irrational
/// constants or compare against a threshold. Never stored globally.
class PrecisionContext {
public:
    static constexpr int kDefaultDigits = 120;
    static constexpr int kMinDigits = 30;

    explicit PrecisionContext(int decimal_digits = kDefaultDigits);
    PrecisionContext(int decimal_digits, Scalar eig_tol, Scalar col_tol);

    [[nodiscard]] int digits() const { return digits_; }
    [[nodiscard]] mpfr_prec_t bits() const { return bits_; }
    [[nodiscard]] const Scalar& eig_tol() const { return eig_tol_; }
    [[nodiscard]] const Scalar& col_tol() const { return col_tol_; }

    /// 10^-(digits - slack): the family of thresholds used throughout.
    [[nodiscard]] Scalar eps(int slack) const { return Scalar::pow10(-(digits_ - slack), bits_); }

    [[nodiscard]] Scalar num(long v) const { return Scalar::from_int(v, bits_); }
    [[nodiscard]] Scalar parse(std::string_view text) const { return Scalar::parse(text, bits_); }
    [[nodiscard]] Scalar pi() const { return Scalar::pi(bits_); }
    /// Rational p/q rounded at working precision.
    [[nodiscard]] Scalar ratio(long p, long q) const { return num(p) / q; }

    /// Honours FEASIKIT_PRECISION when set, else the built-in default.
    static int default_digits_from_env();

private:
    int digits_;
    mpfr_prec_t bits_;
    Scalar eig_tol_;
    Scalar col_tol_;
};

mpfr_prec_t digits_to_bits(int decimal_digits);

}  // namespace feasikit
