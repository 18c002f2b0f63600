#include "lhuilier/families.hpp"

#include <algorithm>
#include <mutex>
#include <set>
#include <stdexcept>

#include "lhuilier/solver.hpp"

namespace lhuilier {

namespace {

Rational R(std::int64_t n, std::int64_t d = 1) { return Rational::make(n, d); }

// c + a*s + b*t
struct Affine {
    Rational c, a, b;
    Rational eval(const Rational& s, const Rational& t) const { return c + a * s + b * t; }
};

// Linear constraint form(s, t) > 0, or >= 0 when closed.
struct Constraint {
    Affine form;
    bool closed;
};

struct Pattern {
    FamilyId id;
    int params;
    std::array<Affine, 5> x;
    std::vector<Constraint> range;
};

Affine cst(Rational c) { return {c, R(0), R(0)}; }
Affine lin(Rational c, Rational a, Rational b = R(0)) { return {c, a, b}; }

const std::vector<Pattern>& patterns() {
    static const std::vector<Pattern> ps = [] {
        const Affine s = lin(R(0), R(1));
        const Affine t = lin(R(0), R(0), R(1));
        const Constraint s_pos{s, false};
        const std::vector<Constraint> sixth{s_pos, {lin(R(1, 6), R(-1)), false}};
        const std::vector<Constraint> quarter{s_pos, {lin(R(1, 4), R(-1)), true}};
        std::vector<Pattern> v;
        v.push_back({{1, 1},
                     2,
                     {s, s, s, t, lin(R(1, 2), R(0), R(-1))},
                     {s_pos, {lin(R(1, 2), R(-1)), false}, {t, false}, {lin(R(1, 4), R(0), R(-1)), true}}});
        v.push_back({{1, 2},
                     2,
                     {cst(R(1, 4)), s, lin(R(1, 2), R(-1)), t, lin(R(1, 2), R(0), R(-1))},
                     {s_pos, {lin(R(0), R(-1), R(1)), true}, {lin(R(1, 4), R(0), R(-1)), true}}});
        v.push_back({{2, 1}, 1, {cst(R(1, 4)), s, lin(R(1, 3), R(-1)), lin(R(1, 3), R(1)), lin(R(1, 2), R(-3))}, sixth});
        v.push_back({{2, 2},
                     1,
                     {lin(R(1, 2), R(-1)), lin(R(1, 2), R(-1)), lin(R(1, 3), R(-1)), lin(R(1, 3), R(1)),
                      lin(R(1, 2), R(-3))},
                     sixth});
        v.push_back({{2, 3}, 1, {lin(R(1, 6), R(1)), s, lin(R(1, 6), R(1)), lin(R(1, 3), R(1)), lin(R(1, 2), R(-3))},
                     sixth});
        v.push_back({{2, 4},
                     1,
                     {lin(R(1, 6), R(-1)), s, lin(R(1, 3), R(-1)), lin(R(1, 6), R(-1)), lin(R(1, 2), R(-3))},
                     sixth});
        v.push_back({{2, 5}, 1, {lin(R(0), R(3)), s, lin(R(1, 3), R(-1)), lin(R(1, 3), R(1)), lin(R(0), R(3))}, sixth});
        v.push_back({{3, 1}, 1, {cst(R(1, 8)), cst(R(1, 24)), cst(R(7, 24)), s, lin(R(1, 2), R(-1))}, quarter});
        v.push_back({{3, 2}, 1, {cst(R(3, 8)), cst(R(5, 24)), cst(R(11, 24)), s, lin(R(1, 2), R(-1))}, quarter});
        return v;
    }();
    return ps;
}

const Pattern& pattern(FamilyId id) {
    for (const auto& p : patterns())
        if (p.id == id) return p;
    throw std::invalid_argument("unknown family " + id.str());
}

bool holds(const Constraint& c, const Rational& s, const Rational& t) {
    auto v = c.form.eval(s, t);
    return c.closed ? v >= R(0) : v > R(0);
}

// Solves pattern == m for (s, t); nullopt when inconsistent or out of range.
std::optional<std::pair<Rational, Rational>> solve_pattern(const Pattern& p, const Tuple5& m) {
    std::optional<Rational> s;
    for (int k = 0; k < 5 && !s; ++k)
        if (!p.x[k].a.is_zero() && p.x[k].b.is_zero()) s = (m.x[k] - p.x[k].c) / p.x[k].a;
    if (!s) return std::nullopt;
    Rational t;
    if (p.params == 2) {
        std::optional<Rational> tt;
        for (int k = 0; k < 5 && !tt; ++k)
            if (!p.x[k].b.is_zero()) tt = (m.x[k] - p.x[k].c - p.x[k].a * *s) / p.x[k].b;
        if (!tt) return std::nullopt;
        t = *tt;
    }
    for (int k = 0; k < 5; ++k)
        if (p.x[k].eval(*s, t) != m.x[k]) return std::nullopt;
    for (const auto& c : p.range)
        if (!holds(c, *s, t)) return std::nullopt;
    return std::make_pair(*s, t);
}

}  // namespace

std::string FamilyId::str() const { return "Phi_{" + std::to_string(i) + "," + std::to_string(j) + "}"; }

const std::vector<FamilyId>& family_ids() {
    static const std::vector<FamilyId> ids = {{1, 1}, {1, 2}, {2, 1}, {2, 2}, {2, 3}, {2, 4}, {2, 5}, {3, 1}, {3, 2}};
    return ids;
}

FamilyId parse_family_id(const std::string& text) {
    std::string digits;
    for (char c : text)
        if (c >= '0' && c <= '9') digits += c;
    if (digits.size() == 2) {
        FamilyId id{digits[0] - '0', digits[1] - '0'};
        for (const auto& f : family_ids())
            if (f == id) return id;
    }
    throw std::invalid_argument("unknown family id: " + text);
}

int family_param_count(FamilyId id) { return pattern(id).params; }

bool family_params_valid(FamilyId id, const Rational& s, const Rational& t) {
    const auto& p = pattern(id);
    for (const auto& c : p.range)
        if (!holds(c, s, p.params == 2 ? t : R(0))) return false;
    return true;
}

Tuple5 instantiate(FamilyId id, const Rational& s, const Rational& t) {
    if (!family_params_valid(id, s, t))
        throw std::invalid_argument("parameters out of range for " + id.str() + ": s=" + s.str() + " t=" + t.str());
    const auto& p = pattern(id);
    Tuple5 r;
    for (int k = 0; k < 5; ++k) r.x[k] = p.x[k].eval(s, p.params == 2 ? t : R(0));
    return r;
}

FamilyId theta_image(FamilyId id) {
    if (id == FamilyId{2, 2}) return {2, 4};
    if (id == FamilyId{2, 4}) return {2, 2};
    if (id == FamilyId{3, 1}) return {3, 2};
    if (id == FamilyId{3, 2}) return {3, 1};
    pattern(id);
    return id;
}

std::optional<FamilyMatch> phi_member(const Tuple5& t) {
    for (const auto& x : t.x)
        if (!in_open_quadrant(x)) return std::nullopt;
    for (const auto& p : patterns()) {
        for (const auto& sigma : all_perms()) {
            Tuple5 m = s4_act(sigma, t);
            m.sign = 1;
            auto sol = solve_pattern(p, m);
            if (!sol) continue;
            FamilyMatch fm;
            fm.id = p.id;
            fm.s = sol->first;
            if (p.params == 2) fm.t = sol->second;
            fm.perm = inverse(sigma);
            return fm;
        }
    }
    return std::nullopt;
}

std::size_t TableReport::flagged_count() const {
    return static_cast<std::size_t>(std::count_if(rows.begin(), rows.end(), [](const RowCheck& r) { return r.flagged(); }));
}

namespace {

bool representative_condition(const Tuple5& t) {
    const auto& x = t.x;
    const bool sorted = x[1] <= x[2] && x[2] <= x[3] && x[3] <= x[4];
    if (!sorted) return false;
    if (x[0] < quarter_pi()) return true;
    return x[0] == quarter_pi() && x[1] + x[4] < half_pi();
}

bool safe_verify(const Tuple5& t) {
    for (const auto& x : t.x)
        if (!in_open_quadrant(x)) return false;
    return verify_solution(t);
}

}  // namespace

TableReport verify_table(const std::vector<SporadicRow>& table, bool fix_search) {
    TableReport report;
    for (const auto& row : table) {
        RowCheck rc;
        rc.row = row;
        const auto& t = row.tuple;
        rc.in_range = std::all_of(t.x.begin(), t.x.end(), [](const RationalAngle& x) { return in_open_quadrant(x); });
        rc.verified = rc.in_range && verify_solution(t);
        rc.representative = representative_condition(t);
        rc.lcm_matches = tuple_lcm(t) == row.heading;
        if (!rc.in_range)
            rc.reason = "entry outside (0, pi/2)";
        else if (!rc.verified)
            rc.reason = "does not satisfy the equation";
        else if (!rc.representative)
            rc.reason = "violates the representative condition";
        else if (!rc.lcm_matches)
            rc.reason = "lcm differs from its heading";

        if (rc.flagged() && fix_search && !(rc.verified && rc.representative)) {
            std::vector<int> positions;
            for (int k = 0; k < 5; ++k)
                if (!in_open_quadrant(t.x[k])) positions.push_back(k);
            if (positions.size() > 1) positions.clear();  // more than one bad entry: no single-entry repair
            else if (positions.empty()) positions = {0, 1, 2, 3, 4};
            std::set<Tuple5> found;
            const auto candidates = candidate_angles(row.heading);
            for (int k : positions) {
                for (const auto& x : candidates) {
                    Tuple5 c = t;
                    c.x[k] = x;
                    if (c == t || !safe_verify(c)) continue;
                    found.insert(c);
                }
            }
            rc.corrections.assign(found.begin(), found.end());
        }
        report.rows.push_back(std::move(rc));
    }
    return report;
}

const std::vector<SporadicRep>& sporadic_reps() {
    static const std::vector<SporadicRep> reps = [] {
        std::vector<SporadicRep> out;
        auto report = verify_table(sporadic_table(), true);
        for (const auto& rc : report.rows) {
            if (!rc.flagged())
                out.push_back({rc.row.index, rc.row.tuple, false});
            else if (rc.corrections.size() == 1)
                out.push_back({rc.row.index, rc.corrections.front(), true});
        }
        return out;
    }();
    return reps;
}

std::vector<Tuple5> expand_orbits(const std::vector<SporadicRep>& reps) {
    std::set<Tuple5> all;
    for (const auto& r : reps) {
        Tuple5 t = r.tuple;
        t.sign = 1;
        for (const auto& g : all_group_elements()) all.insert(act(g, t));
    }
    return {all.begin(), all.end()};
}

namespace {

struct SporadicHit {
    int row;
    GroupElement g;
    bool corrected;
};

const std::map<Tuple5, SporadicHit>& sporadic_index() {
    static const std::map<Tuple5, SporadicHit> index = [] {
        std::map<Tuple5, SporadicHit> m;
        for (const auto& r : sporadic_reps()) {
            Tuple5 t = r.tuple;
            t.sign = 1;
            for (const auto& g : all_group_elements()) m.emplace(act(g, t), SporadicHit{r.index, g, r.corrected});
        }
        return m;
    }();
    return index;
}

}  // namespace

std::string ClassLabel::kind_str() const {
    switch (kind) {
        case Kind::Family: return "family";
        case Kind::Sporadic: return "sporadic";
        case Kind::Unknown: break;
    }
    return "unknown";
}

ClassLabel classify(const Tuple5& t) {
    Tuple5 key = t;
    key.sign = 1;
    ClassLabel label;
    const auto& index = sporadic_index();
    auto hit = index.find(key);
    if (auto fm = phi_member(key)) {
        label.kind = ClassLabel::Kind::Family;
        label.family = fm;
        label.also_sporadic = hit != index.end();
    } else if (hit != index.end()) {
        label.kind = ClassLabel::Kind::Sporadic;
        label.row = hit->second.row;
        label.group_elem = hit->second.g;
        label.corrected_row = hit->second.corrected;
    }
    return label;
}

bool Omega3Branch::is_point() const {
    return std::all_of(dir.begin(), dir.end(), [](const Rational& r) { return r.is_zero(); });
}

Tuple5 Omega3Branch::at(const Rational& u) const {
    Tuple5 r;
    for (int k = 0; k < 5; ++k) r.x[k] = base[k] + dir[k] * u;
    return r;
}

bool Omega3Branch::contains(const Tuple5& t) const {
    if (is_point()) {
        for (int k = 0; k < 5; ++k)
            if (t.x[k] != base[k]) return false;
        return true;
    }
    int k0 = 0;
    while (dir[k0].is_zero()) ++k0;
    const Rational u = (t.x[k0] - base[k0]) / dir[k0];
    if (lo_closed ? u < lo : u <= lo) return false;
    if (hi_closed ? u > hi : u >= hi) return false;
    for (int k = 0; k < 5; ++k)
        if (base[k] + dir[k] * u != t.x[k]) return false;
    return true;
}

namespace {

std::string affine_str(const Rational& c, const Rational& a) {
    std::string s;
    if (!c.is_zero() || a.is_zero()) s = c.str();
    if (a.is_zero()) return s;
    const bool neg = a < R(0);
    const Rational mag = neg ? -a : a;
    if (neg) s += "-";
    else if (!s.empty()) s += "+";
    if (mag != R(1)) s += mag.str() + "*";
    return s + "u";
}

}  // namespace

std::string Omega3Branch::str() const {
    if (is_point()) return at(R(0)).str();
    std::string s = "{(";
    for (int k = 0; k < 5; ++k) s += (k ? "," : "") + affine_str(base[k], dir[k]);
    s += ") : " + lo.str() + (lo_closed ? " <= u " : " < u ") + (hi_closed ? "<= " : "< ") + hi.str() + "}";
    return s;
}

std::vector<Omega3Branch> family_omega3_intersection(FamilyId id) {
    const auto& p = pattern(id);
    std::vector<Omega3Branch> out;
    for (const auto& sigma : all_perms()) {
        std::array<Affine, 5> x;
        x[0] = p.x[0];
        for (int i = 0; i < 4; ++i) x[i + 1] = p.x[sigma[i] + 1];

        // x4 - x1 - x2 - x3 = A s + B t + C.
        const Rational A = x[4].a - x[1].a - x[2].a - x[3].a;
        const Rational B = x[4].b - x[1].b - x[2].b - x[3].b;
        const Rational C = x[4].c - x[1].c - x[2].c - x[3].c;

        // (s, t) = (s0 + s1 u, t0 + t1 u), or a fixed point when point is set.
        Rational s0, s1, t0, t1;
        bool point = false;
        if (p.params == 2 && !B.is_zero()) {
            s1 = R(1);
            t0 = -C / B;
            t1 = -A / B;
        } else if (p.params == 2 && !A.is_zero()) {
            s0 = -C / A;
            t1 = R(1);
        } else if (!A.is_zero()) {
            s0 = -C / A;
            point = true;
        } else if (C.is_zero()) {
            if (p.params == 2) throw std::logic_error("family_omega3_intersection: two-dimensional intersection");
            s1 = R(1);
        } else {
            continue;
        }

        // Each constraint becomes alpha*u + beta > 0 (or >= 0).
        std::vector<Constraint> cons = p.range;
        auto diff = [](const Affine& f, const Affine& g) { return Affine{f.c - g.c, f.a - g.a, f.b - g.b}; };
        cons.push_back({x[0], false});
        cons.push_back({diff(cst(half_pi()), x[0]), false});
        cons.push_back({x[1], false});
        cons.push_back({diff(x[2], x[1]), true});
        cons.push_back({diff(x[3], x[2]), true});
        cons.push_back({diff(x[4], x[3]), false});
        cons.push_back({diff(cst(half_pi()), x[4]), false});

        std::optional<Rational> lo, hi;
        bool lo_closed = false, hi_closed = false, empty = false;
        for (const auto& c : cons) {
            const Rational alpha = c.form.a * s1 + c.form.b * t1;
            const Rational beta = c.form.c + c.form.a * s0 + c.form.b * t0;
            if (point || alpha.is_zero()) {
                if (!(c.closed ? beta >= R(0) : beta > R(0))) empty = true;
                continue;
            }
            const Rational bound = -beta / alpha;
            if (alpha > R(0)) {
                if (!lo || bound > *lo || (bound == *lo && !c.closed)) {
                    lo = bound;
                    lo_closed = c.closed;
                }
            } else {
                if (!hi || bound < *hi || (bound == *hi && !c.closed)) {
                    hi = bound;
                    hi_closed = c.closed;
                }
            }
        }
        if (empty) continue;

        Omega3Branch b;
        b.perm = sigma;
        auto coord = [&](const Affine& f, const Rational& u) { return f.c + f.a * (s0 + s1 * u) + f.b * (t0 + t1 * u); };
        if (point) {
            for (int k = 0; k < 5; ++k) b.base[k] = coord(x[k], R(0));
            b.lo = b.hi = R(0);
            b.lo_closed = b.hi_closed = true;
        } else {
            if (!lo || !hi) throw std::logic_error("family_omega3_intersection: unbounded branch");
            if (*lo > *hi) continue;
            if (*lo == *hi && !(lo_closed && hi_closed)) continue;
            if (*lo == *hi) {
                for (int k = 0; k < 5; ++k) b.base[k] = coord(x[k], *lo);
                b.lo = b.hi = R(0);
                b.lo_closed = b.hi_closed = true;
            } else {
                for (int k = 0; k < 5; ++k) {
                    b.base[k] = coord(x[k], R(0));
                    b.dir[k] = coord(x[k], R(1)) - b.base[k];
                }
                b.lo = *lo;
                b.hi = *hi;
                b.lo_closed = lo_closed;
                b.hi_closed = hi_closed;
            }
        }
        const bool dup = std::any_of(out.begin(), out.end(), [&](const Omega3Branch& o) {
            return o.base == b.base && o.dir == b.dir && o.lo == b.lo && o.hi == b.hi && o.lo_closed == b.lo_closed &&
                   o.hi_closed == b.hi_closed;
        });
        if (!dup) out.push_back(b);
    }
    return out;
}

bool omega3_branches_contain(const std::vector<Omega3Branch>& branches, const Tuple5& t) {
    return std::any_of(branches.begin(), branches.end(), [&](const Omega3Branch& b) { return b.contains(t); });
}

std::vector<Tuple5> sporadic_omega3() {
    std::vector<Tuple5> out;
    for (const auto& t : expand_orbits(sporadic_reps()))
        if (omega3_member(t)) out.push_back(t);
    return out;
}

}  // namespace lhuilier
