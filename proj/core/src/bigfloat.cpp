#include "lhuilier/bigfloat.hpp"

#include <cstdlib>
#include <vector>

namespace lhuilier {

BigFloat::BigFloat(mpfr_prec_t bits) : live_(true) {
    mpfr_init2(value_, bits);
    mpfr_set_zero(value_, 1);
}

BigFloat::BigFloat(double v, mpfr_prec_t bits) : live_(true) {
    mpfr_init2(value_, bits);
    mpfr_set_d(value_, v, MPFR_RNDN);
}

BigFloat::BigFloat(const BigFloat& o) : live_(true) {
    mpfr_init2(value_, o.precision());
    mpfr_set(value_, o.value_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& o) noexcept : live_(true) {
    mpfr_init2(value_, o.precision());
    mpfr_swap(value_, o.value_);
}

BigFloat& BigFloat::operator=(const BigFloat& o) {
    if (this != &o) {
        mpfr_set_prec(value_, o.precision());
        mpfr_set(value_, o.value_, MPFR_RNDN);
    }
    return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& o) noexcept {
    mpfr_swap(value_, o.value_);
    return *this;
}

BigFloat::~BigFloat() {
    if (live_) mpfr_clear(value_);
}

double BigFloat::to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }

std::string BigFloat::str(int digits) const {
    std::vector<char> buf(static_cast<std::size_t>(digits) + 32);
    mpfr_snprintf(buf.data(), buf.size(), "%.*Rg", digits, value_);
    return buf.data();
}

BigFloat BigFloat::chord(long long num, long long den, mpfr_prec_t bits) {
    BigFloat r(bits);
    mpfr_const_pi(r.value_, MPFR_RNDN);
    mpfr_mul_si(r.value_, r.value_, static_cast<long>(num), MPFR_RNDN);
    mpfr_div_si(r.value_, r.value_, static_cast<long>(den), MPFR_RNDN);
    mpfr_sin(r.value_, r.value_, MPFR_RNDN);
    mpfr_abs(r.value_, r.value_, MPFR_RNDN);
    mpfr_mul_ui(r.value_, r.value_, 2, MPFR_RNDN);
    return r;
}

BigFloat& BigFloat::operator+=(const BigFloat& o) {
    mpfr_add(value_, value_, o.value_, MPFR_RNDN);
    return *this;
}

BigFloat& BigFloat::operator-=(const BigFloat& o) {
    mpfr_sub(value_, value_, o.value_, MPFR_RNDN);
    return *this;
}

BigFloat& BigFloat::operator*=(const BigFloat& o) {
    mpfr_mul(value_, value_, o.value_, MPFR_RNDN);
    return *this;
}

BigFloat& BigFloat::mul_si(long k) {
    mpfr_mul_si(value_, value_, k, MPFR_RNDN);
    return *this;
}

BigFloat BigFloat::log() const {
    BigFloat r(precision());
    mpfr_log(r.value_, value_, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::exp() const {
    BigFloat r(precision());
    mpfr_exp(r.value_, value_, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::abs() const {
    BigFloat r(precision());
    mpfr_abs(r.value_, value_, MPFR_RNDN);
    return r;
}

mpfr_prec_t default_precision_bits() {
    if (const char* env = std::getenv("LHUILIER_PRECISION_BITS")) {
        long v = std::strtol(env, nullptr, 10);
        if (v >= 64) return static_cast<mpfr_prec_t>(v);
    }
    return 128;
}

}  // namespace lhuilier
