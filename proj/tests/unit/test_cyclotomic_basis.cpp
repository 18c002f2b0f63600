#include <doctest.h>

#include <stdexcept>

#include <mpfr.h>

#include "lhuilier/basis.hpp"

using namespace lhuilier;

namespace {

// Independent oracle: log |1 - exp(2 pi i a / n)| = log |2 sin(pi a / n)|.
BigFloat oracle_log_chord(std::int64_t n, std::int64_t a, mpfr_prec_t bits) {
    BigFloat r(bits);
    mpfr_const_pi(r.get(), MPFR_RNDN);
    mpfr_mul_si(r.get(), r.get(), static_cast<long>(a), MPFR_RNDN);
    mpfr_div_si(r.get(), r.get(), static_cast<long>(n), MPFR_RNDN);
    mpfr_sin(r.get(), r.get(), MPFR_RNDN);
    mpfr_mul_ui(r.get(), r.get(), 2, MPFR_RNDN);
    mpfr_abs(r.get(), r.get(), MPFR_RNDN);
    mpfr_log(r.get(), r.get(), MPFR_RNDN);
    return r;
}

std::string joined(const std::vector<BasisElement>& v) {
    std::string s;
    for (const auto& b : v) s += (s.empty() ? "" : " ") + b.str();
    return s;
}

}  // namespace

TEST_SUITE("cyclotomic_basis") {
    TEST_CASE("residue forms round trip through the CRT") {
        CHECK(residue_form(45, 7).str() == "((2,1),2)_45");
        for (std::int64_t n : {12, 45, 60, 72, 196, 884})
            for (std::int64_t a = 1; a < n; ++a) CHECK(residue_to_index(residue_form(n, a)) == a);
        CHECK_THROWS_AS(residue_form(10, 20), std::invalid_argument);
    }

    TEST_CASE("relative basis membership follows the prime power cases") {
        CHECK(in_relative_basis(2, 1));
        CHECK(relative_basis(4).empty());
        CHECK(relative_basis(6).empty());
        CHECK(relative_basis(7).size() == 3);
        CHECK_FALSE(in_relative_basis(16, 2));
    }

    TEST_CASE("frozen Conrad bases") {
        CHECK(joined(conrad_basis(12)) == "3:1 4:1 12:1");
        CHECK(joined(conrad_basis(20)) == "4:1 5:1 5:2 20:1 20:13");
    }

    TEST_CASE("relation rank plus basis size equals the generator count") {
        for (std::int64_t n = 2; n <= 120; ++n) {
            const auto& P = presentation(n);
            CHECK(P.rank() == conrad_basis(n).size());
            CHECK(P.relation_rank() + P.rank() == P.generator_count());
        }
    }

    TEST_CASE("symmetry v(n,a) = v(n,-a)") {
        for (std::int64_t n : {15, 24, 60, 84})
            for (std::int64_t a = 1; a < n; ++a) CHECK(represent(n, a) == represent(n, n - a));
    }

    TEST_CASE("distribution relations hold exactly in coordinates") {
        for (std::int64_t n : {12, 30, 36, 60, 84}) {
            for (auto m : divisors(n)) {
                if (m < 2 || m == n) continue;
                for (std::int64_t b = 1; b < n; ++b) {
                    if ((m * b) % n == 0) continue;
                    BasisVector sum(n);
                    bool degenerate = false;
                    for (std::int64_t j = 0; j < m; ++j) {
                        std::int64_t idx = (b + j * (n / m)) % n;
                        if (idx == 0) degenerate = true;
                        else sum += represent(n, idx);
                    }
                    if (degenerate) continue;
                    CHECK(sum == represent(n, (m * b) % n));
                }
            }
        }
    }

    TEST_CASE("lifting a lower-level vector agrees with the direct representation") {
        for (std::int64_t a = 1; a < 15; ++a) CHECK(lift(represent(15, a), 60) == represent(60, 4 * a));
    }

    TEST_CASE("numeric magnitudes match the chord oracle at 128 bits") {
        const mpfr_prec_t bits = 128;
        const BigFloat tol(1e-25, bits);
        for (std::int64_t n : {7, 20, 45, 60, 72, 105}) {
            for (std::int64_t a = 1; a < n; ++a) {
                const auto diff = numeric_log_magnitude(represent(n, a), bits) - oracle_log_chord(n, a, bits);
                CHECK(diff.abs() < tol);
            }
        }
    }

    TEST_CASE("invalid inputs are rejected") {
        CHECK_THROWS_AS(represent(1, 1), std::invalid_argument);
        CHECK_THROWS_AS(represent(12, 24), std::invalid_argument);
    }
}
