#include <doctest.h>

#include <set>
#include <stdexcept>

#include "lhuilier/families.hpp"
#include "lhuilier/triangles.hpp"

using namespace lhuilier;

namespace {

Measurement M(const char* E, const char* a, const char* b, const char* c) { return make_measurement(E, a, b, c); }

Tuple5 T(const char* a, const char* b, const char* c, const char* d, const char* e) {
    Tuple5 t;
    t.x = {parse_angle(a), parse_angle(b), parse_angle(c), parse_angle(d), parse_angle(e)};
    return t;
}

std::vector<Measurement> lambda1_samples() {
    std::vector<Measurement> out = {M("1", "1/2", "2/3", "2/3")};
    for (std::int64_t d : {3, 5, 7, 12, 30}) {
        for (std::int64_t m = 1; m < d; ++m) {
            const auto q = Rational::make(m, d);
            const auto h = Rational::make(1, 2);
            out.push_back(q <= h ? Measurement{q, q, h, h} : Measurement{q, h, h, q});
        }
    }
    return out;
}

}  // namespace

TEST_SUITE("triangles") {
    TEST_CASE("measurement basics") {
        const auto m = M("1/2", "2/5", "1/2", "4/5");
        CHECK(m.str() == "(1/2,2/5,1/2,4/5)");
        CHECK(measurement_lcm(m) == 10);
        CHECK(quarter_angles(m) == T("1/8", "1/40", "7/40", "9/40", "17/40"));
    }

    TEST_CASE("L'Huilier check examples") {
        CHECK(lhuilier_check(M("1/2", "1/2", "1/2", "1/2")));
        CHECK(lhuilier_check(M("1/2", "2/5", "1/2", "4/5")));
        CHECK_FALSE(lhuilier_check(M("1/2", "1/3", "1/3", "1/3")));
        CHECK_THROWS_AS(lhuilier_check(M("1/2", "1/6", "1/6", "1/2")), std::domain_error);
    }

    TEST_CASE("Omega_2 validity") {
        for (const auto& m : lambda2()) {
            CHECK_MESSAGE(omega2_valid(m), m.str());
            CHECK(lhuilier_check(m));
            CHECK(lambda_class(m) == "Lambda2");
        }
        for (const auto& m : lambda1_samples()) {
            CHECK_MESSAGE(omega2_valid(m), m.str());
            CHECK(lhuilier_check(m));
            CHECK(lambda_class(m) == "Lambda1");
        }
        CHECK(ineq_failure(M("1/2", "1/6", "1/6", "1/3")).has_value());
        CHECK_FALSE(omega2_valid(M("1/2", "1/6", "1/6", "1/3")));
        CHECK_FALSE(omega2_valid(M("1/2", "1/3", "1/3", "1/3")));
        CHECK_FALSE(omega2_valid(M("1/2", "1/2", "2/5", "4/5")));
        CHECK(omega2_valid(M("1/3", "1/3", "1/2", "1/2")));
    }

    TEST_CASE("Lambda catalogue") {
        CHECK(lambda2().size() == 7);
        CHECK(std::set<Measurement>(lambda2().begin(), lambda2().end()).size() == 7);
        CHECK(in_lambda1(M("1/3", "1/3", "1/2", "1/2")));
        CHECK(in_lambda1(M("3/4", "1/2", "1/2", "3/4")));
        CHECK(in_lambda1(M("1", "1/2", "2/3", "2/3")));
        CHECK_FALSE(in_lambda1(M("3/4", "3/4", "1/2", "1/2")));
        CHECK(lambda_class(M("5/4", "1/2", "2/3", "3/4")) == "Lambda2");
        CHECK(lambda_class(M("1/2", "1/3", "1/3", "1/3")) == "none");
        for (const auto& m : lambda1_members(12)) {
            CHECK(in_lambda1(m));
            CHECK(measurement_lcm(m) <= 12);
        }
    }

    TEST_CASE("psi examples") {
        CHECK(psi_map(T("1/8", "1/40", "7/40", "9/40", "17/40")) == M("1/2", "2/5", "1/2", "4/5"));
        CHECK(psi_map(T("1/4", "1/8", "1/8", "5/24", "11/24")) == M("1", "1/2", "2/3", "2/3"));
        CHECK(psi_map(T("1/16", "1/48", "5/48", "11/48", "17/48")) == M("1/4", "1/4", "1/2", "2/3"));
        CHECK(psi_map(T("1/8", "1/24", "1/12", "7/24", "5/12")) == M("1/2", "1/4", "2/3", "3/4"));
        CHECK_THROWS_AS(psi_map(T("1/8", "7/40", "1/40", "9/40", "17/40")), std::invalid_argument);
        CHECK_THROWS_AS(phi_map(M("1/2", "1/3", "1/3", "1/3")), std::invalid_argument);
    }

    TEST_CASE("phi and psi are inverse") {
        std::set<Measurement> images;
        for (const auto& t : sporadic_omega3()) {
            const auto m = psi_map(t);
            CHECK(omega2_valid(m));
            CHECK(phi_map(m) == t);
            images.insert(m);
        }
        images.insert(psi_map(T("1/8", "1/24", "1/12", "7/24", "5/12")));
        CHECK(images == std::set<Measurement>(lambda2().begin(), lambda2().end()));

        auto all = lambda1_samples();
        all.insert(all.end(), lambda2().begin(), lambda2().end());
        for (const auto& m : all) {
            const auto t = phi_map(m);
            CHECK(omega3_member(t));
            CHECK(psi_map(t) == m);
        }
    }

    TEST_CASE("measurement search at small bounds") {
        CHECK(search_measurements(2) == std::vector<Measurement>{M("1/2", "1/2", "1/2", "1/2")});

        std::set<Measurement> expected;
        for (const auto& m : lambda2())
            if (measurement_lcm(m) <= 12) expected.insert(m);
        for (const auto& m : lambda1_members(12)) expected.insert(m);
        const auto found = search_measurements(12);
        CHECK(std::set<Measurement>(found.begin(), found.end()) == expected);
        CHECK(std::is_sorted(found.begin(), found.end()));
        for (const auto& m : found) {
            CHECK_FALSE(ineq_failure(m).has_value());
            CHECK(omega2_valid(m));
        }
    }

    TEST_CASE("prime denominator checks") {
        CHECK(prime_denominator_check(2) == std::vector<Measurement>{M("1/2", "1/2", "1/2", "1/2")});
        for (std::int64_t p : {3, 5, 7}) CHECK(prime_denominator_check(p).empty());
    }
}
