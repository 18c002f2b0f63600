#include "lhuilier/tan_repr.hpp"

#include <stdexcept>

namespace lhuilier {

std::vector<CyclotomicFactor> tan_factors(const RationalAngle& x) {
    if (!in_open_quadrant(x)) throw std::invalid_argument("tan_factors: angle outside (0, pi/2): " + x.str());
    const std::int64_t a = x.num;
    const std::int64_t d = x.den;
    if (d <= 2) throw std::invalid_argument("tan_factors: denominator must exceed 2");
    if (d == 4) return {};
    if (d % 2 == 1) return {{d, a, 2}, {d, 2 * a, -1}};
    if (d % 4 == 2) {
        std::int64_t m = d / 2;
        std::int64_t half = mod_floor(a * mod_inverse(2, m), m);
        return {{m, a, 1}, {m, half, -2}};
    }
    if (d % 8 == 4) {
        // tan(a pi / 4m) = v(4m,a) / v(4m,a+2m) and v(4m,a) v(4m,a+2m) = v(m,a) / v(m,a/2).
        std::int64_t m = d / 4;
        std::int64_t half = mod_floor(a * mod_inverse(2, m), m);
        return {{d, a, 2}, {m, a, -1}, {m, half, 1}};
    }
    return {{d, a, 2}, {d / 2, a, -1}};
}

BasisVector tan_vector(const RationalAngle& x, std::int64_t N) {
    if (N % x.den != 0) throw std::invalid_argument("tan_vector: denominator does not divide the level");
    const auto& P = presentation(N);
    BasisVector v(N);
    for (const auto& f : tan_factors(x)) {
        auto r = P.represent((N / f.level) * f.index);
        r *= f.exponent;
        v += r;
    }
    return v;
}

std::vector<std::int64_t> tan_dense(const RationalAngle& x, const Presentation& P) {
    const std::int64_t N = P.level();
    if (N % x.den != 0) throw std::invalid_argument("tan_dense: denominator does not divide the level");
    std::vector<std::int64_t> dense(P.rank(), 0);
    for (const auto& f : tan_factors(x)) P.accumulate((N / f.level) * f.index, f.exponent, dense);
    return dense;
}

BasisVector product_vector(const std::vector<std::pair<RationalAngle, std::int64_t>>& xs, std::int64_t N) {
    BasisVector v(N);
    for (const auto& [x, e] : xs) {
        auto t = tan_vector(x, N);
        t *= e;
        v += t;
    }
    return v;
}

}  // namespace lhuilier
