#include "lhuilier/triangles.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "lhuilier/number_theory.hpp"
#include "lhuilier/solver.hpp"

namespace lhuilier {

namespace {

Rational R(std::int64_t n, std::int64_t d = 1) { return Rational::make(n, d); }

const char* kQuarterNames[5] = {"E/4", "(a+b-c)/4", "(a-b+c)/4", "(-a+b+c)/4", "(a+b+c)/4"};

}  // namespace

std::strong_ordering operator<=>(const Measurement& l, const Measurement& r) {
    if (auto c = l.E <=> r.E; c != 0) return c;
    if (auto c = l.a <=> r.a; c != 0) return c;
    if (auto c = l.b <=> r.b; c != 0) return c;
    return l.c <=> r.c;
}

std::string Measurement::str() const {
    return "(" + E.str() + "," + a.str() + "," + b.str() + "," + c.str() + ")";
}

Measurement make_measurement(const std::string& E, const std::string& a, const std::string& b, const std::string& c) {
    return {parse_angle(E), parse_angle(a), parse_angle(b), parse_angle(c)};
}

std::int64_t measurement_lcm(const Measurement& m) {
    return lcm64(lcm64(m.E.den, m.a.den), lcm64(m.b.den, m.c.den));
}

Tuple5 quarter_angles(const Measurement& m) {
    const Rational q = R(1, 4);
    Tuple5 t;
    t.x = {m.E * q, (m.a + m.b - m.c) * q, (m.a - m.b + m.c) * q, (-m.a + m.b + m.c) * q, (m.a + m.b + m.c) * q};
    return t;
}

std::optional<std::string> ineq_failure(const Measurement& m) {
    const Rational s1 = m.a + m.b - m.c;
    const Rational s2 = m.a - m.b + m.c;
    const Rational s3 = -m.a + m.b + m.c;
    const Rational s4 = m.a + m.b + m.c;
    if (!(s1 > R(0))) return "0 < a+b-c fails";
    if (!(s1 <= s2)) return "a+b-c <= a-b+c fails";
    if (!(s2 <= s3)) return "a-b+c <= -a+b+c fails";
    if (!(s3 < s4)) return "-a+b+c < a+b+c fails";
    if (!(s4 < R(2))) return "a+b+c < 2pi fails";
    return std::nullopt;
}

bool lhuilier_check(const Measurement& m) {
    const Tuple5 t = quarter_angles(m);
    for (int i = 0; i < 5; ++i)
        if (!in_open_quadrant(t.x[i]))
            throw std::domain_error(std::string("lhuilier_check: ") + kQuarterNames[i] + " = " + t.x[i].str() +
                                    " pi is outside (0, pi/2)" +
                                    (ineq_failure(m) ? "; " + *ineq_failure(m) : std::string()));
    return verify_solution(t);
}

std::optional<std::string> omega2_failure(const Measurement& m) {
    if (!(m.a > R(0))) return "a > 0 fails";
    if (!(m.a <= m.b)) return "a <= b fails";
    if (!(m.b <= m.c)) return "b <= c fails";
    if (!(m.c < R(1))) return "c < pi fails";
    if (!(m.E > R(0) && m.E < R(2))) return "0 < E < 2pi fails";
    if (auto f = ineq_failure(m)) return f;
    if (!lhuilier_check(m)) return "L'Huilier relation fails";
    return std::nullopt;
}

Tuple5 phi_map(const Measurement& m) {
    if (auto f = omega2_failure(m)) throw std::invalid_argument("phi_map: " + m.str() + " is not in Omega_2: " + *f);
    return quarter_angles(m);
}

Measurement psi_map(const Tuple5& t) {
    if (!omega3_member(t)) throw std::invalid_argument("psi_map: " + t.str() + " is not in Omega_3");
    const Rational two = R(2);
    return {R(4) * t.x[0], two * (t.x[1] + t.x[2]), two * (t.x[1] + t.x[3]), two * (t.x[2] + t.x[3])};
}

bool in_lambda1(const Measurement& m) {
    const Rational half = R(1, 2);
    if (m == Measurement{R(1), half, R(2, 3), R(2, 3)}) return true;
    if (m.E == m.a && m.b == half && m.c == half && m.a > R(0) && m.a <= half) return true;
    if (m.E == m.c && m.a == half && m.b == half && m.c > half && m.c < R(1)) return true;
    return false;
}

const std::vector<Measurement>& lambda2() {
    static const std::vector<Measurement> rows = {
        {R(1, 2), R(2, 5), R(1, 2), R(4, 5)}, {R(1, 4), R(1, 4), R(1, 2), R(2, 3)},
        {R(1, 2), R(1, 4), R(2, 3), R(3, 4)}, {R(5, 4), R(1, 2), R(2, 3), R(3, 4)},
        {R(1), R(2, 5), R(2, 3), R(4, 5)},    {R(3, 2), R(1, 2), R(2, 3), R(4, 5)},
        {R(1, 2), R(2, 5), R(1, 2), R(2, 3)},
    };
    return rows;
}

std::string lambda_class(const Measurement& m) {
    if (in_lambda1(m)) return "Lambda1";
    const auto& l2 = lambda2();
    if (std::find(l2.begin(), l2.end(), m) != l2.end()) return "Lambda2";
    return "none";
}

std::vector<Measurement> lambda1_members(std::int64_t D) {
    std::set<Measurement> out;
    const Rational half = R(1, 2);
    Measurement special{R(1), half, R(2, 3), R(2, 3)};
    if (measurement_lcm(special) <= D) out.insert(special);
    for (std::int64_t d = 1; d <= D; ++d) {
        for (std::int64_t m = 1; m < d; ++m) {
            if (gcd64(m, d) != 1) continue;
            const Rational q = R(m, d);
            Measurement cand = q <= half ? Measurement{q, q, half, half} : Measurement{q, half, half, q};
            if (measurement_lcm(cand) <= D) out.insert(cand);
        }
    }
    return {out.begin(), out.end()};
}

namespace {

std::vector<Measurement> measurements_from(const std::vector<Tuple5>& sols) {
    std::set<Measurement> out;
    for (const auto& t : sols)
        if (omega3_member(t)) out.insert(psi_map(t));
    return {out.begin(), out.end()};
}

}  // namespace

std::vector<Measurement> search_measurements(std::int64_t D, unsigned jobs) {
    if (D < 1) throw std::invalid_argument("search_measurements: D must be positive");
    SearchOptions opts;
    opts.jobs = jobs;
    // Search output lists tails in ascending order, which is the Omega_3 arrangement.
    auto report = search(DenominatorSpec::make_max_lcm(checked_mul(4, D)), opts);
    std::vector<Measurement> out;
    for (const auto& m : measurements_from(report.solutions))
        if (measurement_lcm(m) <= D) out.push_back(m);
    return out;
}

std::vector<Measurement> prime_denominator_check(std::int64_t p) {
    if (!is_prime(p)) throw std::invalid_argument("prime_denominator_check: " + std::to_string(p) + " is not prime");
    std::vector<std::int64_t> dens;
    for (auto d : divisors(4 * p))
        if (d >= 3) dens.push_back(d);
    const auto spec = DenominatorSpec::make_fixed(dens);
    std::vector<Measurement> out;
    for (const auto& m : measurements_from(search_level(spec, spec.max_lcm, 1)))
        if (m.E.den == p && m.a.den == p && m.b.den == p && m.c.den == p) out.push_back(m);
    return out;
}

}  // namespace lhuilier
