#pragma once

#include <mpfr.h>

#include <string>

namespace lhuilier {

// Owning wrapper around an mpfr_t with round-to-nearest arithmetic.
class BigFloat {
public:
    explicit BigFloat(mpfr_prec_t bits = 128);
    BigFloat(double v, mpfr_prec_t bits);
    BigFloat(const BigFloat& o);
    BigFloat(BigFloat&& o) noexcept;
    BigFloat& operator=(const BigFloat& o);
    BigFloat& operator=(BigFloat&& o) noexcept;
    ~BigFloat();

    mpfr_ptr get() { return value_; }
    mpfr_srcptr get() const { return value_; }
    mpfr_prec_t precision() const { return mpfr_get_prec(value_); }

    double to_double() const;
    std::string str(int digits = 30) const;

    // |2 sin(pi * num / den)|, which equals |1 - exp(2 pi i num / den)|.
    static BigFloat chord(long long num, long long den, mpfr_prec_t bits);

    BigFloat& operator+=(const BigFloat& o);
    BigFloat& operator-=(const BigFloat& o);
    BigFloat& operator*=(const BigFloat& o);
    BigFloat& mul_si(long k);

    BigFloat log() const;
    BigFloat exp() const;
    BigFloat abs() const;

    friend BigFloat operator-(BigFloat a, const BigFloat& b) { return a -= b; }
    friend BigFloat operator+(BigFloat a, const BigFloat& b) { return a += b; }
    friend bool operator<(const BigFloat& a, const BigFloat& b) { return mpfr_less_p(a.value_, b.value_); }

private:
    mpfr_t value_;
    bool live_ = false;
};

// Default working precision: LHUILIER_PRECISION_BITS when set and >= 64, else 128.
mpfr_prec_t default_precision_bits();

}  // namespace lhuilier
