#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace lhuilier {

// Raised when an intermediate value leaves the int64 range.
class OverflowError : public std::overflow_error {
public:
    using std::overflow_error::overflow_error;
};

struct PrimePower {
    std::int64_t p = 0;
    int e = 0;
    std::int64_t power() const;  // p^e
};

using Factorization = std::vector<PrimePower>;

std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_sub(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);

std::int64_t gcd64(std::int64_t a, std::int64_t b);
std::int64_t lcm64(std::int64_t a, std::int64_t b);

// Floor modulus: result in [0, m) for m > 0.
std::int64_t mod_floor(std::int64_t a, std::int64_t m);

// Inverse of a modulo m; throws std::domain_error when gcd(a, m) != 1.
std::int64_t mod_inverse(std::int64_t a, std::int64_t m);

std::int64_t ipow(std::int64_t base, int exp);

// Prime factorization with strictly increasing primes. n >= 1.
Factorization factorize(std::int64_t n);

bool is_prime(std::int64_t n);
bool is_squarefree(std::int64_t n);

// All positive divisors of n in ascending order.
std::vector<std::int64_t> divisors(std::int64_t n);

}  // namespace lhuilier
