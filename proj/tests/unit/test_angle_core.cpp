#include <doctest.h>

#include <limits>
#include <set>
#include <stdexcept>

#include "lhuilier/angle.hpp"
#include "lhuilier/number_theory.hpp"

using namespace lhuilier;

namespace {

Rational Q(std::int64_t n, std::int64_t d) { return Rational::make(n, d); }

Tuple5 T(const char* a, const char* b, const char* c, const char* d, const char* e) {
    Tuple5 t;
    t.x = {parse_angle(a), parse_angle(b), parse_angle(c), parse_angle(d), parse_angle(e)};
    return t;
}

}  // namespace

TEST_SUITE("angle_core") {
    TEST_CASE("rationals are reduced and ordered exactly") {
        CHECK(Q(6, -8) == Q(-3, 4));
        CHECK(Q(0, 7) == Rational(0));
        CHECK(Q(1, 3) + Q(1, 6) == Q(1, 2));
        CHECK(Q(1, 3) * Q(3, 7) == Q(1, 7));
        CHECK(Q(1, 3) / Q(2, 3) == Q(1, 2));
        CHECK(Q(1, 3) < Q(1, 2));
        CHECK(Q(-1, 2) < Q(1, 1000));
        CHECK_THROWS_AS(Q(1, 0), std::invalid_argument);
        CHECK_THROWS_AS(Q(1, 2) / Rational(0), std::domain_error);
    }

    TEST_CASE("overflow raises instead of wrapping") {
        const auto big = std::numeric_limits<std::int64_t>::max();
        CHECK_THROWS_AS(checked_mul(big, 2), OverflowError);
        CHECK_THROWS_AS(checked_add(big, 1), OverflowError);
        CHECK_THROWS_AS(Q(big, 3) + Q(big, 5), OverflowError);
    }

    TEST_CASE("parse_angle accepts p/q with an optional pi suffix") {
        CHECK(parse_angle("3/12") == Q(1, 4));
        CHECK(parse_angle(" 1/8pi ") == Q(1, 8));
        CHECK(parse_angle("1") == Rational(1));
        CHECK_THROWS_AS(parse_angle("1/x"), std::invalid_argument);
        CHECK_THROWS_AS(parse_angle("1/0"), std::invalid_argument);
        CHECK_THROWS_AS(parse_angle(""), std::invalid_argument);
    }

    TEST_CASE("tuple printing and lcm") {
        auto t = T("1/8", "1/40", "7/40", "9/40", "17/40");
        CHECK(t.str() == "(1/8,1/40,7/40,9/40,17/40)");
        CHECK(tuple_lcm(t) == 40);
        t.sign = -1;
        CHECK(t.str() == "(1/8,1/40,7/40,9/40,17/40)[-]");
    }

    TEST_CASE("number theory helpers") {
        CHECK(gcd64(12, 18) == 6);
        CHECK(lcm64(4, 6) == 12);
        CHECK(mod_floor(-3, 7) == 4);
        CHECK(mod_inverse(2, 15) == 8);
        CHECK_THROWS_AS(mod_inverse(3, 15), std::domain_error);
        auto f = factorize(360);
        REQUIRE(f.size() == 3);
        CHECK(f[0].p == 2);
        CHECK(f[0].e == 3);
        CHECK(f[2].power() == 5);
        CHECK(is_squarefree(1155));
        CHECK_FALSE(is_squarefree(196));
        CHECK(divisors(12) == std::vector<std::int64_t>{1, 2, 3, 4, 6, 12});
    }

    TEST_CASE("permutations form S4 with the documented composition") {
        const auto& perms = all_perms();
        CHECK(perms.size() == 24);
        CHECK(perms.front() == identity_perm());
        auto t = T("1/8", "1/40", "7/40", "9/40", "17/40");
        for (const auto& s : perms) {
            CHECK(compose(s, inverse(s)) == identity_perm());
            CHECK(s4_act(inverse(s), s4_act(s, t)) == t);
            for (const auto& u : perms) CHECK(s4_act(compose(s, u), t) == s4_act(s, s4_act(u, t)));
        }
    }

    TEST_CASE("theta is an involution and the group has 48 elements") {
        auto t = T("1/8", "1/40", "7/40", "9/40", "17/40");
        CHECK(theta_act(theta_act(t)) == t);
        CHECK(all_group_elements().size() == 48);
        CHECK(orbit(t).size() == 48);
        CHECK(orbit(T("1/4", "1/4", "1/4", "1/4", "1/4")).size() == 1);
    }

    TEST_CASE("canonical_rep is constant on orbits") {
        const std::vector<Tuple5> samples = {T("1/8", "1/40", "7/40", "9/40", "17/40"),
                                             T("1/4", "1/15", "2/15", "4/15", "7/15"),
                                             T("3/8", "3/40", "11/40", "13/40", "19/40"),
                                             T("1/7", "1/7", "1/7", "1/5", "3/10")};
        for (const auto& t : samples) {
            const auto rep = canonical_rep(t).rep;
            for (const auto& g : all_group_elements()) CHECK(canonical_rep(act(g, t)).rep == rep);
        }
        CHECK(canonical_rep(T("3/8", "3/40", "11/40", "13/40", "19/40")).rep == T("1/8", "1/40", "7/40", "9/40", "17/40"));
    }

    TEST_CASE("boundary tuples use the lexicographic fallback and are marked") {
        auto c = canonical_rep(T("1/4", "1/8", "1/5", "3/10", "3/8"));
        CHECK(c.boundary);
        CHECK_FALSE(canonical_rep(T("1/8", "1/40", "7/40", "9/40", "17/40")).boundary);
        CHECK_THROWS_AS(canonical_rep(T("1/2", "1/8", "1/8", "1/8", "1/8")), std::domain_error);
    }

    TEST_CASE("omega3 membership") {
        CHECK(omega3_member(T("1/8", "1/40", "7/40", "9/40", "17/40")));
        CHECK_FALSE(omega3_member(T("1/8", "7/40", "1/40", "9/40", "17/40")));
        CHECK_FALSE(omega3_member(T("1/8", "1/40", "7/40", "9/40", "18/40")));
    }
}
