#include "lhuilier/angle.hpp"

#include <algorithm>
#include <charconv>
#include <set>
#include <stdexcept>

#include "lhuilier/number_theory.hpp"

namespace lhuilier {

Rational Rational::make(std::int64_t n, std::int64_t d) {
    if (d == 0) throw std::invalid_argument("zero denominator");
    if (d < 0) {
        n = checked_sub(0, n);
        d = checked_sub(0, d);
    }
    std::int64_t g = gcd64(n, d);
    Rational r;
    r.num = n / g;
    r.den = d / g;
    return r;
}

std::string Rational::str() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    __int128 l = static_cast<__int128>(a.num) * b.den;
    __int128 r = static_cast<__int128>(b.num) * a.den;
    if (l < r) return std::strong_ordering::less;
    if (l > r) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

Rational operator+(const Rational& a, const Rational& b) {
    std::int64_t g = gcd64(a.den, b.den);
    std::int64_t n = checked_add(checked_mul(a.num, b.den / g), checked_mul(b.num, a.den / g));
    return Rational::make(n, checked_mul(a.den / g, b.den));
}

Rational operator-(const Rational& a) { return Rational::make(checked_sub(0, a.num), a.den); }

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
    std::int64_t g1 = gcd64(a.num, b.den);
    std::int64_t g2 = gcd64(b.num, a.den);
    if (g1 == 0) g1 = 1;
    if (g2 == 0) g2 = 1;
    return Rational::make(checked_mul(a.num / g1, b.num / g2), checked_mul(a.den / g2, b.den / g1));
}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.num == 0) throw std::domain_error("division by zero");
    return a * Rational::make(b.den, b.num);
}

RationalAngle reduce_angle(std::int64_t num, std::int64_t den) { return Rational::make(num, den); }

namespace {

std::int64_t parse_int(std::string_view s) {
    std::int64_t v = 0;
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
        throw std::invalid_argument("not an integer: '" + std::string(s) + "'");
    return v;
}

}  // namespace

RationalAngle parse_angle(std::string_view text) {
    while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
    while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
    if (text.size() >= 2 && text.substr(text.size() - 2) == "pi") text.remove_suffix(2);
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return reduce_angle(parse_int(text), 1);
    return reduce_angle(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
}

const RationalAngle& quarter_pi() {
    static const RationalAngle q = Rational::make(1, 4);
    return q;
}

const RationalAngle& half_pi() {
    static const RationalAngle h = Rational::make(1, 2);
    return h;
}

bool in_open_quadrant(const RationalAngle& x) { return x.num > 0 && x < half_pi(); }

std::strong_ordering operator<=>(const Tuple5& a, const Tuple5& b) {
    for (int i = 0; i < 5; ++i) {
        auto c = a.x[i] <=> b.x[i];
        if (c != 0) return c;
    }
    return a.sign <=> b.sign;
}

std::string Tuple5::str() const {
    std::string s = "(";
    for (int i = 0; i < 5; ++i) {
        if (i) s += ",";
        s += x[i].str();
    }
    s += ")";
    if (sign < 0) s += "[-]";
    return s;
}

Tuple5 make_tuple5(std::initializer_list<std::pair<std::int64_t, std::int64_t>> entries, int sign) {
    if (entries.size() != 5) throw std::invalid_argument("a tuple needs five entries");
    Tuple5 t;
    int i = 0;
    for (const auto& [n, d] : entries) t.x[i++] = reduce_angle(n, d);
    t.sign = sign;
    return t;
}

std::int64_t tuple_lcm(const Tuple5& t) {
    std::int64_t l = 1;
    for (const auto& x : t.x) l = lcm64(l, x.den);
    return l;
}

Perm4 identity_perm() { return {0, 1, 2, 3}; }

Perm4 compose(const Perm4& sigma, const Perm4& tau) {
    Perm4 r{};
    for (int i = 0; i < 4; ++i) r[i] = tau[sigma[i]];
    return r;
}

Perm4 inverse(const Perm4& p) {
    Perm4 r{};
    for (int i = 0; i < 4; ++i) r[p[i]] = i;
    return r;
}

const std::vector<Perm4>& all_perms() {
    static const std::vector<Perm4> perms = [] {
        std::vector<Perm4> v;
        Perm4 p = identity_perm();
        do {
            v.push_back(p);
        } while (std::next_permutation(p.begin(), p.end()));
        return v;
    }();
    return perms;
}

std::string perm_str(const Perm4& p) {
    std::string s;
    for (int v : p) s += static_cast<char>('1' + v);
    return s;
}

Tuple5 s4_act(const Perm4& perm, const Tuple5& t) {
    Tuple5 r = t;
    for (int i = 0; i < 4; ++i) r.x[i + 1] = t.x[perm[i] + 1];
    return r;
}

Tuple5 theta_act(const Tuple5& t) {
    Tuple5 r = t;
    for (auto& x : r.x) x = half_pi() - x;
    return r;
}

Tuple5 act(const GroupElement& g, const Tuple5& t) {
    return s4_act(g.perm, g.theta ? theta_act(t) : t);
}

const std::vector<GroupElement>& all_group_elements() {
    static const std::vector<GroupElement> elems = [] {
        std::vector<GroupElement> v;
        for (bool th : {false, true})
            for (const auto& p : all_perms()) v.push_back({th, p});
        return v;
    }();
    return elems;
}

Tuple5 sort_tail(const Tuple5& t) {
    Tuple5 r = t;
    std::sort(r.x.begin() + 1, r.x.end());
    return r;
}

CanonicalForm canonical_rep(const Tuple5& t) {
    for (const auto& x : t.x)
        if (!in_open_quadrant(x)) throw std::domain_error("canonical_rep: entry outside (0, pi/2)");
    Tuple5 plain = sort_tail(t);
    Tuple5 flipped = sort_tail(theta_act(t));
    const auto& q = quarter_pi();
    if (t.x[0] < q) return {plain, false};
    if (t.x[0] > q) return {flipped, false};
    auto edge = plain.x[1] + plain.x[4];
    if (edge < half_pi()) return {plain, false};
    if (edge > half_pi()) return {flipped, false};
    return {std::min(plain, flipped), true};
}

std::vector<Tuple5> orbit(const Tuple5& t) {
    std::set<Tuple5> s;
    for (const auto& g : all_group_elements()) s.insert(act(g, t));
    return {s.begin(), s.end()};
}

bool omega3_member(const Tuple5& t) {
    const auto& x = t.x;
    if (!in_open_quadrant(x[0])) return false;
    if (!(x[1].num > 0)) return false;
    if (!(x[1] <= x[2] && x[2] <= x[3] && x[3] < x[4] && x[4] < half_pi())) return false;
    return x[1] + x[2] + x[3] == x[4];
}

}  // namespace lhuilier
