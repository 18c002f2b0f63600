#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "lhuilier/angle.hpp"
#include "lhuilier/basis.hpp"

namespace lhuilier {

// One factor v(level, index)^exponent of a cyclotomic expression.
struct CyclotomicFactor {
    std::int64_t level = 0;
    std::int64_t index = 0;
    std::int64_t exponent = 0;
};

// tan(x) as a product of cyclotomic numbers modulo torsion, by the shape of den(x).
// Empty for den(x) = 4. Throws std::invalid_argument outside (0, pi/2) or for den(x) <= 2.
std::vector<CyclotomicFactor> tan_factors(const RationalAngle& x);

// Coordinates of tan(x) in the basis of X^N; requires den(x) | N.
BasisVector tan_vector(const RationalAngle& x, std::int64_t N);

// Dense variant over presentation(N).basis().
std::vector<std::int64_t> tan_dense(const RationalAngle& x, const Presentation& P);

// Sum of exponent * tan_vector(x, N).
BasisVector product_vector(const std::vector<std::pair<RationalAngle, std::int64_t>>& xs, std::int64_t N);

}  // namespace lhuilier
