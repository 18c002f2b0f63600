#include "lhuilier/number_theory.hpp"

#include <algorithm>
#include <numeric>

namespace lhuilier {

std::int64_t PrimePower::power() const { return ipow(p, e); }

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw OverflowError("int64 overflow in addition");
    return r;
}

std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("int64 overflow in subtraction");
    return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("int64 overflow in multiplication");
    return r;
}

std::int64_t gcd64(std::int64_t a, std::int64_t b) {
    if (a == INT64_MIN || b == INT64_MIN) throw OverflowError("gcd of INT64_MIN");
    return std::gcd(a, b);
}

std::int64_t lcm64(std::int64_t a, std::int64_t b) {
    if (a == 0 || b == 0) return 0;
    std::int64_t g = gcd64(a, b);
    std::int64_t r = checked_mul(a / g, b);
    return r < 0 ? checked_sub(0, r) : r;
}

std::int64_t mod_floor(std::int64_t a, std::int64_t m) {
    std::int64_t r = a % m;
    return r < 0 ? r + m : r;
}

std::int64_t mod_inverse(std::int64_t a, std::int64_t m) {
    if (m == 1) return 0;
    std::int64_t old_r = mod_floor(a, m), r = m;
    std::int64_t old_s = 1, s = 0;
    while (r != 0) {
        std::int64_t q = old_r / r;
        std::int64_t t = old_r - q * r;
        old_r = r;
        r = t;
        t = old_s - q * s;
        old_s = s;
        s = t;
    }
    if (old_r != 1) throw std::domain_error("mod_inverse: arguments are not coprime");
    return mod_floor(old_s, m);
}

std::int64_t ipow(std::int64_t base, int exp) {
    std::int64_t r = 1;
    for (int i = 0; i < exp; ++i) r = checked_mul(r, base);
    return r;
}

Factorization factorize(std::int64_t n) {
    if (n < 1) throw std::domain_error("factorize: n must be positive");
    Factorization f;
    for (std::int64_t p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        f.push_back({p, e});
    }
    if (n > 1) f.push_back({n, 1});
    return f;
}

bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t p = 2; p * p <= n; ++p)
        if (n % p == 0) return false;
    return true;
}

bool is_squarefree(std::int64_t n) {
    auto f = factorize(n);
    return std::all_of(f.begin(), f.end(), [](const PrimePower& pp) { return pp.e == 1; });
}

std::vector<std::int64_t> divisors(std::int64_t n) {
    std::vector<std::int64_t> d;
    for (std::int64_t k = 1; k * k <= n; ++k) {
        if (n % k != 0) continue;
        d.push_back(k);
        if (k != n / k) d.push_back(n / k);
    }
    std::sort(d.begin(), d.end());
    return d;
}

}  // namespace lhuilier
