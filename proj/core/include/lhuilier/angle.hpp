#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace lhuilier {

// Reduced fraction num/den with den > 0. Arithmetic is overflow-checked.
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    Rational() = default;
    Rational(std::int64_t n) : num(n), den(1) {}  // NOLINT(google-explicit-constructor)
    static Rational make(std::int64_t n, std::int64_t d);

    bool is_zero() const { return num == 0; }
    std::string str() const;

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num == b.num && a.den == b.den;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);
};

Rational operator+(const Rational& a, const Rational& b);
Rational operator-(const Rational& a, const Rational& b);
Rational operator-(const Rational& a);
Rational operator*(const Rational& a, const Rational& b);
Rational operator/(const Rational& a, const Rational& b);

// An element g of Q*pi, stored as the coefficient of pi.
using RationalAngle = Rational;

// Normal form of (num/den)*pi. Throws std::invalid_argument when den == 0.
RationalAngle reduce_angle(std::int64_t num, std::int64_t den);

// Parses "p/q" or "p" (pi implied); throws std::invalid_argument on bad input.
RationalAngle parse_angle(std::string_view text);

const RationalAngle& quarter_pi();  // 1/4
const RationalAngle& half_pi();     // 1/2

// 0 < x < pi/2.
bool in_open_quadrant(const RationalAngle& x);

struct Tuple5 {
    std::array<RationalAngle, 5> x{};
    int sign = 1;  // +1 selects tan^2 x0 = prod tan xi, -1 the twisted equation

    friend bool operator==(const Tuple5&, const Tuple5&) = default;
    friend std::strong_ordering operator<=>(const Tuple5& a, const Tuple5& b);
    std::string str() const;
};

Tuple5 make_tuple5(std::initializer_list<std::pair<std::int64_t, std::int64_t>> entries, int sign = 1);

std::int64_t tuple_lcm(const Tuple5& t);

// A permutation of the tail positions. perm[i] = j means position i+1 receives x_{j+1}.
using Perm4 = std::array<int, 4>;

Perm4 identity_perm();
Perm4 compose(const Perm4& sigma, const Perm4& tau);  // acts as sigma after tau
Perm4 inverse(const Perm4& p);
const std::vector<Perm4>& all_perms();  // 24 permutations, lexicographic
std::string perm_str(const Perm4& p);   // one-line notation with 1-based values

Tuple5 s4_act(const Perm4& perm, const Tuple5& t);
Tuple5 theta_act(const Tuple5& t);

struct GroupElement {
    bool theta = false;
    Perm4 perm = {0, 1, 2, 3};
};

Tuple5 act(const GroupElement& g, const Tuple5& t);
const std::vector<GroupElement>& all_group_elements();  // 48 elements of Z/2 x S4

// Tail sorted ascending, x0 untouched.
Tuple5 sort_tail(const Tuple5& t);

struct CanonicalForm {
    Tuple5 rep;
    bool boundary = false;  // x0 = pi/4 and x1 + x4 = pi/2: lexicographic fallback used
};

// Unique orbit representative; throws std::domain_error when an entry is outside (0, pi/2).
CanonicalForm canonical_rep(const Tuple5& t);

std::vector<Tuple5> orbit(const Tuple5& t);  // distinct images, sorted

bool omega3_member(const Tuple5& t);

}  // namespace lhuilier
