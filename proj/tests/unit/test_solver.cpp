#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <set>
#include <sstream>
#include <stdexcept>

#include "lhuilier/families.hpp"
#include "lhuilier/number_theory.hpp"
#include "lhuilier/solver.hpp"
#include "lhuilier/tan_repr.hpp"

using namespace lhuilier;

namespace {

long double log_tan(const RationalAngle& x) {
    return std::log(std::tan(std::numbers::pi_v<long double> * x.num / x.den));
}

// Naive quadruple loop over sorted tails with a long double filter, then exact
// confirmation. Keeps tuples whose lcm is exactly N.
std::vector<Tuple5> brute_force(std::int64_t N) {
    const auto xs = candidate_angles(N);
    std::vector<long double> lt;
    for (const auto& x : xs) lt.push_back(log_tan(x));
    const std::size_t n = xs.size();
    std::vector<Tuple5> out;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = b; c < n; ++c)
                for (std::size_t d = c; d < n; ++d)
                    for (std::size_t e = d; e < n; ++e) {
                        const long double r = 2 * lt[a] - lt[b] - lt[c] - lt[d] - lt[e];
                        if (std::fabs(r) > 1e-9L) continue;
                        Tuple5 t;
                        t.x = {xs[a], xs[b], xs[c], xs[d], xs[e]};
                        if (tuple_lcm(t) != N) continue;
                        if (verify_solution(t)) out.push_back(t);
                    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Tuple6> brute_force_six(std::int64_t n) {
    std::vector<RationalAngle> xs;
    for (const auto& x : candidate_angles(4 * n)) {
        const auto d = x.den;
        if (d == 4 || d == n || d == 2 * n || d == 4 * n) xs.push_back(x);
    }
    std::vector<long double> lt;
    for (const auto& x : xs) lt.push_back(log_tan(x));
    const std::size_t m = xs.size();
    std::vector<Tuple6> out;
    std::array<std::size_t, 6> i{};
    for (i[0] = 0; i[0] < m; ++i[0])
        for (i[1] = 0; i[1] < m; ++i[1])
            for (i[2] = i[1]; i[2] < m; ++i[2])
                for (i[3] = i[2]; i[3] < m; ++i[3])
                    for (i[4] = i[3]; i[4] < m; ++i[4])
                        for (i[5] = i[4]; i[5] < m; ++i[5]) {
                            long double r = 2 * lt[i[0]];
                            for (int k = 1; k < 6; ++k) r -= lt[i[k]];
                            if (std::fabs(r) > 1e-9L) continue;
                            BasisVector v = 2 * tan_vector(xs[i[0]], 4 * n);
                            for (int k = 1; k < 6; ++k) v -= tan_vector(xs[i[k]], 4 * n);
                            if (!v.is_zero()) continue;
                            Tuple6 t;
                            for (int k = 0; k < 6; ++k) t.x[k] = xs[i[k]];
                            out.push_back(t);
                        }
    std::sort(out.begin(), out.end());
    return out;
}

Tuple5 T(const char* a, const char* b, const char* c, const char* d, const char* e) {
    Tuple5 t;
    t.x = {parse_angle(a), parse_angle(b), parse_angle(c), parse_angle(d), parse_angle(e)};
    return t;
}

std::filesystem::path temp_path(const std::string& name) {
    return std::filesystem::temp_directory_path() / ("lhuilier_test_" + name);
}

bool is_phi11_pattern(const Tuple5& t) {
    const auto m = phi_member(t);
    return m && m->id == FamilyId{1, 1};
}

}  // namespace

TEST_SUITE("solver") {
    TEST_CASE("candidate angles") {
        CHECK(candidate_angles(5) == std::vector<RationalAngle>{parse_angle("1/5"), parse_angle("2/5")});
        CHECK(candidate_angles(8) ==
              std::vector<RationalAngle>{parse_angle("1/8"), parse_angle("1/4"), parse_angle("3/8")});
        const auto c40 = candidate_angles(40);
        CHECK(std::find(c40.begin(), c40.end(), parse_angle("17/40")) != c40.end());
        CHECK(enumerate_candidates(40).size() == c40.size());
    }

    TEST_CASE("verify_solution examples") {
        CHECK(verify_solution(T("1/8", "1/40", "7/40", "9/40", "17/40")));
        CHECK(verify_solution(T("1/4", "1/4", "1/4", "1/4", "1/4")));
        CHECK_FALSE(verify_solution(T("1/5", "1/5", "1/5", "1/5", "1/5")));
        auto neg = T("1/4", "1/4", "1/4", "1/4", "1/4");
        neg.sign = -1;
        CHECK_FALSE(verify_solution(neg));
        CHECK_THROWS_AS(verify_solution(T("1/2", "1/4", "1/4", "1/4", "1/4")), std::invalid_argument);
        CHECK_THROWS_AS(verify_solution(T("1/4", "1/4", "1/4", "1/4", "0")), std::invalid_argument);
    }

    TEST_CASE("meet-in-the-middle equals naive brute force for N <= 48") {
        const auto spec = DenominatorSpec::make_max_lcm(48);
        for (std::int64_t N = 3; N <= 48; ++N) {
            const auto found = search_level(spec, N, 1);
            CHECK_MESSAGE(found == brute_force(N), "level " << N);
        }
    }

    TEST_CASE("search report invariants") {
        const auto report = search(DenominatorSpec::make_max_lcm(40));
        CHECK(report.complete);
        CHECK(report.levels_total == 38);
        CHECK(std::is_sorted(report.solutions.begin(), report.solutions.end()));
        std::size_t total = 0;
        for (const auto& [lcm, count] : report.per_lcm) total += count;
        CHECK(total == report.solutions.size());
        std::set<std::int64_t> sporadic_lcms;
        for (const auto& t : report.solutions) {
            CHECK(t.x[1] <= t.x[2]);
            CHECK(t.x[2] <= t.x[3]);
            CHECK(t.x[3] <= t.x[4]);
            CHECK(verify_solution(t));
            const auto label = classify(t);
            CHECK(label.kind != ClassLabel::Kind::Unknown);
            if (label.kind == ClassLabel::Kind::Sporadic) sporadic_lcms.insert(tuple_lcm(t));
        }
        CHECK(sporadic_lcms == std::set<std::int64_t>{30, 40});
    }

    TEST_CASE("orbit members of found solutions verify") {
        const auto sols = search_level(DenominatorSpec::make_max_lcm(40), 40, 1);
        REQUIRE_FALSE(sols.empty());
        for (const auto& t : sols)
            for (const auto& u : orbit(t)) {
                const bool in_range = std::all_of(u.x.begin(), u.x.end(), in_open_quadrant);
                if (in_range) CHECK(verify_solution(u));
            }
    }

    TEST_CASE("the twisted equation has no solutions in the open quadrant") {
        const auto report = search(DenominatorSpec::make_max_lcm(30), {.sign = -1});
        CHECK(report.solutions.empty());
        CHECK(search_level(DenominatorSpec::make_fixed({5, 10, 20}), 20, -1).empty());
    }

    TEST_CASE("sign decorations split 16/16 and all verify") {
        for (const auto& t : {T("1/8", "1/40", "7/40", "9/40", "17/40"), T("1/7", "1/7", "1/7", "1/5", "3/10")}) {
            const auto d = generalize_signs(t);
            CHECK(d.plus.size() == 16);
            CHECK(d.minus.size() == 16);
            CHECK(std::find(d.plus.begin(), d.plus.end(), t) != d.plus.end());
            for (const auto& u : d.plus) CHECK(u.sign == 1);
            for (const auto& u : d.minus) CHECK(u.sign == -1);
            for (const auto& u : d.plus) CHECK(verify_solution(u));
            for (const auto& u : d.minus) CHECK(verify_solution(u));
            // A decoration with the wrong sign field fails.
            auto wrong = d.minus.front();
            wrong.sign = 1;
            CHECK_FALSE(verify_solution(wrong));
        }
    }

    TEST_CASE("prime levels give only Phi11-pattern tuples") {
        for (std::int64_t n : {5, 7, 11, 13}) {
            const auto spec = DenominatorSpec::make_fixed({n, 2 * n, 4 * n});
            const auto sols = search_level(spec, spec.max_lcm, 1);
            CHECK_FALSE(sols.empty());
            for (const auto& t : sols) CHECK_MESSAGE(is_phi11_pattern(t), t.str());
        }
    }

    TEST_CASE("a den-4n count of 0 or 2 when den(x0) is n or 2n") {
        for (std::int64_t n : {5, 7, 11, 13}) {
            const auto spec = DenominatorSpec::make_fixed({n, 2 * n, 4 * n});
            for (const auto& t : search_level(spec, spec.max_lcm, 1)) {
                if (t.x[0].den == 4 * n) continue;
                int count = 0;
                for (int i = 1; i < 5; ++i) count += t.x[i].den == 4 * n;
                CHECK_MESSAGE((count == 0 || count == 2), t.str());
            }
        }
    }

    TEST_CASE("reduced equations") {
        for (std::int64_t n : {143, 49}) {
            CHECK(solve_reduced(ReducedEquation::Red20, {n, 2 * n}).empty());
            CHECK(solve_reduced(ReducedEquation::Red3, {n, 2 * n}).empty());
            CHECK(solve_reduced(ReducedEquation::Red2, {n, 2 * n}).empty());
            const auto r22 = solve_reduced(ReducedEquation::Red22, {n, 2 * n});
            CHECK(r22.size() == (n == 143 ? 120u : 42u));
            for (const auto& v : r22) CHECK(v[0] == v[1]);
        }
    }

    TEST_CASE("six-variable search equals brute force and always contains pi/4") {
        for (std::int64_t n : {5, 7}) {
            const auto sols = search_sixvar(DenominatorSpec::make_fixed({4, n, 2 * n, 4 * n}));
            CHECK(sols == brute_force_six(n));
            CHECK(sols.size() == (n == 5 ? 55u : 112u));
            for (const auto& t : sols) {
                bool quarter = false;
                for (int j = 1; j < 6; ++j) quarter |= t.x[j] == quarter_pi();
                CHECK_MESSAGE(quarter, t.str());
            }
        }
        CHECK_THROWS_AS(search_sixvar(DenominatorSpec::make_max_lcm(20)), std::invalid_argument);
    }

    TEST_CASE("denominator specs") {
        const auto a = DenominatorSpec::make_max_lcm(60);
        CHECK(a.str() == "max-lcm:60");
        CHECK(DenominatorSpec::parse(a.str()) == a);
        CHECK(a.levels().size() == 58);
        const auto b = DenominatorSpec::make_fixed({20, 5, 10, 5});
        CHECK(b.str() == "den-set:5,10,20");
        CHECK(b.max_lcm == 20);
        CHECK(b.levels() == std::vector<std::int64_t>{20});
        CHECK(DenominatorSpec::parse(b.str()) == b);
        CHECK_THROWS_AS(DenominatorSpec::make_fixed({2, 5}), std::invalid_argument);
        CHECK_THROWS_AS(DenominatorSpec::make_fixed({}), std::invalid_argument);
        CHECK_THROWS_AS(DenominatorSpec::parse("max-lcm:x"), std::invalid_argument);
        CHECK_THROWS_AS(DenominatorSpec::parse("lcm60"), std::invalid_argument);
    }

    TEST_CASE("checkpoint round trip and resume") {
        const auto spec = DenominatorSpec::make_max_lcm(60);
        const auto path = temp_path("resume.jsonl");
        std::filesystem::remove(path);
        const auto full = search(spec, {.checkpoint = path.string()});

        const auto data = checkpoint_load(path.string());
        CHECK(data.spec == spec);
        CHECK(data.sign == 1);
        CHECK(data.levels.size() == 58);

        // Keep the header and the first 30 levels, as after an interruption.
        std::vector<std::string> lines;
        {
            std::ifstream in(path);
            for (std::string line; std::getline(in, line);) lines.push_back(line);
        }
        REQUIRE(lines.size() == 59);
        {
            std::ofstream out(path, std::ios::trunc);
            for (std::size_t i = 0; i <= 30; ++i) out << lines[i] << '\n';
        }
        const auto resumed = search(spec, {.checkpoint = path.string(), .resume = true});
        CHECK(resumed.levels_resumed == 30);
        CHECK(resumed.solutions == full.solutions);
        CHECK(resumed.per_lcm == full.per_lcm);
        CHECK(checkpoint_load(path.string()).levels.size() == 58);

        CHECK_THROWS_AS(search(DenominatorSpec::make_max_lcm(50), {.checkpoint = path.string(), .resume = true}),
                        std::runtime_error);
        std::filesystem::remove(path);
    }

    TEST_CASE("corrupt checkpoints are rejected") {
        const auto path = temp_path("corrupt.jsonl");
        checkpoint_write_header(path.string(), DenominatorSpec::make_max_lcm(20), 1);
        checkpoint_append_level(path.string(), 5, search_level(DenominatorSpec::make_max_lcm(20), 5, 1));
        CHECK(checkpoint_load(path.string()).levels.size() == 1);
        {
            std::ofstream out(path, std::ios::app);
            out << "{\"type\":\"level\",\"level\":7,\"solutions\":[[\"1/7\"]]}\n";
        }
        CHECK_THROWS_AS(checkpoint_load(path.string()), std::runtime_error);
        {
            std::ofstream out(path, std::ios::trunc);
            out << "not json\n";
        }
        CHECK_THROWS_AS(checkpoint_load(path.string()), std::runtime_error);
        std::filesystem::remove(path);
        CHECK_THROWS_AS(checkpoint_load(path.string()), std::runtime_error);
    }
}
