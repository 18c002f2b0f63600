#include <doctest.h>

#include <stdexcept>

#include <mpfr.h>

#include "lhuilier/number_theory.hpp"
#include "lhuilier/solver.hpp"
#include "lhuilier/tan_repr.hpp"

using namespace lhuilier;

namespace {

// Independent oracle: log tan(pi * x) straight from MPFR.
BigFloat oracle_log_tan(const RationalAngle& x, mpfr_prec_t bits) {
    BigFloat r(bits);
    mpfr_const_pi(r.get(), MPFR_RNDN);
    mpfr_mul_si(r.get(), r.get(), static_cast<long>(x.num), MPFR_RNDN);
    mpfr_div_si(r.get(), r.get(), static_cast<long>(x.den), MPFR_RNDN);
    mpfr_tan(r.get(), r.get(), MPFR_RNDN);
    mpfr_log(r.get(), r.get(), MPFR_RNDN);
    return r;
}

}  // namespace

TEST_SUITE("tan_repr") {
    TEST_CASE("frozen small representations") {
        CHECK(tan_vector(parse_angle("1/5"), 5).str() == "5:1^2 5:2^-1");
        CHECK(tan_factors(parse_angle("1/4")).empty());
        CHECK(tan_vector(parse_angle("1/4"), 20).is_zero());
        CHECK(tan_vector(parse_angle("1/3"), 6) == -1 * tan_vector(parse_angle("1/6"), 6));
    }

    TEST_CASE("tan x times tan(pi/2 - x) is trivial") {
        for (std::int64_t N : {12, 40, 60, 84}) {
            for (const auto& x : candidate_angles(N)) {
                const auto y = half_pi() - x;
                CHECK((tan_vector(x, N) + tan_vector(y, N)).is_zero());
            }
        }
    }

    TEST_CASE("magnitudes match MPFR tan for denominators up to 60") {
        const mpfr_prec_t bits = 128;
        const BigFloat tol(1e-25, bits);
        for (std::int64_t q = 3; q <= 60; ++q) {
            for (std::int64_t p = 1; 2 * p < q; ++p) {
                if (gcd64(p, q) != 1) continue;
                const auto x = reduce_angle(p, q);
                const auto diff = numeric_log_magnitude(tan_vector(x, q), bits) - oracle_log_tan(x, bits);
                CHECK_MESSAGE(diff.abs() < tol, x.str());
            }
        }
    }

    TEST_CASE("vectors lift consistently between levels") {
        for (const auto& x : candidate_angles(30)) CHECK(lift(tan_vector(x, 30), 120) == tan_vector(x, 120));
    }

    TEST_CASE("dense and sparse forms agree") {
        const auto& P = presentation(60);
        for (const auto& x : candidate_angles(60)) CHECK(P.from_dense(tan_dense(x, P)) == tan_vector(x, 60));
    }

    TEST_CASE("product_vector is additive") {
        const auto a = parse_angle("1/5"), b = parse_angle("1/12");
        CHECK(product_vector({{a, 2}, {b, -1}}, 60) == 2 * tan_vector(a, 60) - tan_vector(b, 60));
    }

    TEST_CASE("inadmissible angles are rejected") {
        CHECK_THROWS_AS(tan_factors(parse_angle("1/2")), std::invalid_argument);
        CHECK_THROWS_AS(tan_factors(parse_angle("3/5")), std::invalid_argument);
        CHECK_THROWS_AS(tan_vector(parse_angle("1/7"), 12), std::invalid_argument);
    }
}
