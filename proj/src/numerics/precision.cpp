#include "feasikit/numerics/precision.hpp"

#include <cmath>
#include <cstdlib>
#include <string>

namespace feasikit {

mpfr_prec_t digits_to_bits(int decimal_digits) {
    // log2(10) bits per digit plus a few guard bits.
    return static_cast<mpfr_prec_t>(std::ceil(decimal_digits * 3.3219280948873623)) + 8;
}

PrecisionContext::PrecisionContext(int decimal_digits)
    : digits_(decimal_digits), bits_(digits_to_bits(decimal_digits)) {
    if (decimal_digits < kMinDigits) {
        throw std::invalid_argument("precision must be at least " + std::to_string(kMinDigits) + " digits, got " +
                                    std::to_string(decimal_digits));
    }
    eig_tol_ = eps(10);
    col_tol_ = eps(10);
}

PrecisionContext::PrecisionContext(int decimal_digits, Scalar eig_tol, Scalar col_tol)
    : PrecisionContext(decimal_digits) {
    if (!(eig_tol > 0) || !(col_tol > 0)) throw std::invalid_argument("tolerances must be positive");
    eig_tol_ = eig_tol.with_bits(bits_);
    col_tol_ = col_tol.with_bits(bits_);
}

int PrecisionContext::default_digits_from_env() {
    const char* env = std::getenv("FEASIKIT_PRECISION");
    if (env == nullptr || *env == '\0') return kDefaultDigits;
    try {
        std::size_t used = 0;
        const int v = std::stoi(env, &used);
        if (used == std::string(env).size()) return v;
    } catch (const std::exception&) {
    }
    throw std::invalid_argument(std::string("FEASIKIT_PRECISION is not an integer: ") + env);
}

}  // namespace feasikit
