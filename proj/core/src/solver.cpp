#include "lhuilier/solver.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "lhuilier/number_theory.hpp"
#include "lhuilier/tan_repr.hpp"

namespace lhuilier {

namespace {

using Dense = std::vector<std::int64_t>;

// Residual tolerance of the numeric cross-check on log-magnitudes.
constexpr double kNumericTolerance = 1e-25;

BigFloat log_abs_tan(const RationalAngle& x, mpfr_prec_t bits) {
    BigFloat r(bits);
    mpfr_const_pi(r.get(), MPFR_RNDN);
    mpfr_mul_si(r.get(), r.get(), static_cast<long>(x.num), MPFR_RNDN);
    mpfr_div_si(r.get(), r.get(), static_cast<long>(x.den), MPFR_RNDN);
    mpfr_tan(r.get(), r.get(), MPFR_RNDN);
    mpfr_abs(r.get(), r.get(), MPFR_RNDN);
    mpfr_log(r.get(), r.get(), MPFR_RNDN);
    return r;
}

bool numerically_zero(const BigFloat& v) {
    return v.abs() < BigFloat(kNumericTolerance, v.precision());
}

std::vector<std::uint64_t> hash_weights(std::size_t n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<std::uint64_t> w(n);
    for (auto& x : w) x = rng() | 1U;
    return w;
}

std::uint64_t hash_dense(const Dense& v, const std::vector<std::uint64_t>& w) {
    std::uint64_t h = 0;
    for (std::size_t k = 0; k < v.size(); ++k) h += w[k] * static_cast<std::uint64_t>(v[k]);
    return h;
}

struct LevelData {
    std::int64_t level = 0;
    std::vector<RationalAngle> angles;
    std::vector<Dense> dense;
    std::vector<std::uint64_t> hash;
    std::vector<BigFloat> logs;
};

LevelData prepare_level(std::int64_t level, const std::vector<RationalAngle>& angles) {
    LevelData L;
    L.level = level;
    L.angles = angles;
    const auto& P = presentation(level);
    auto w = hash_weights(P.rank(), 0x9e3779b97f4a7c15ULL ^ static_cast<std::uint64_t>(level));
    const auto bits = default_precision_bits();
    for (const auto& x : angles) {
        L.dense.push_back(tan_dense(x, P));
        L.hash.push_back(hash_dense(L.dense.back(), w));
        L.logs.push_back(log_abs_tan(x, bits));
    }
    return L;
}

std::vector<RationalAngle> angles_with_dens(const std::vector<std::int64_t>& dens) {
    std::vector<RationalAngle> out;
    for (auto d : dens)
        for (std::int64_t a = 1; 2 * a < d; ++a)
            if (gcd64(a, d) == 1) out.push_back(RationalAngle::make(a, d));
    std::sort(out.begin(), out.end());
    return out;
}

std::int64_t lcm_of(const std::vector<std::int64_t>& v) {
    std::int64_t l = 1;
    for (auto d : v) l = lcm64(l, d);
    return l;
}

// Exact relation sum_k coef[k] * dense[idx[k]] == 0 together with the numeric
// cross-check on the same combination.
bool relation_holds(const LevelData& L, const std::vector<std::pair<std::size_t, std::int64_t>>& terms) {
    const std::size_t r = L.dense.empty() ? 0 : L.dense.front().size();
    bool exact = true;
    for (std::size_t k = 0; k < r && exact; ++k) {
        std::int64_t s = 0;
        for (const auto& [i, c] : terms) s += c * L.dense[i][k];
        exact = s == 0;
    }
    BigFloat acc(default_precision_bits());
    for (const auto& [i, c] : terms) {
        BigFloat t = L.logs[i];
        t.mul_si(static_cast<long>(c));
        acc += t;
    }
    if (exact != numerically_zero(acc)) {
        std::string msg = "numeric check disagrees with the exact verdict at level " + std::to_string(L.level) + ":";
        for (const auto& [i, c] : terms) msg += " " + L.angles[i].str() + "^" + std::to_string(c);
        throw std::logic_error(msg);
    }
    return exact;
}

struct PairEntry {
    std::uint64_t h;
    std::uint32_t i;
    std::uint32_t j;
    bool operator<(const PairEntry& o) const {
        return h != o.h ? h < o.h : (i != o.i ? i < o.i : j < o.j);
    }
};

std::vector<PairEntry> build_pairs(const LevelData& L) {
    std::vector<PairEntry> pairs;
    const auto n = static_cast<std::uint32_t>(L.angles.size());
    pairs.reserve(static_cast<std::size_t>(n) * (n + 1) / 2);
    for (std::uint32_t i = 0; i < n; ++i)
        for (std::uint32_t j = i; j < n; ++j) pairs.push_back({L.hash[i] + L.hash[j], i, j});
    std::sort(pairs.begin(), pairs.end());
    return pairs;
}

}  // namespace

DenominatorSpec DenominatorSpec::make_max_lcm(std::int64_t D) {
    if (D < 1) throw std::invalid_argument("max-lcm bound must be positive");
    DenominatorSpec s;
    s.kind = Kind::MaxLcm;
    s.max_lcm = D;
    return s;
}

DenominatorSpec DenominatorSpec::make_fixed(std::vector<std::int64_t> dens) {
    if (dens.empty()) throw std::invalid_argument("denominator set is empty");
    for (auto d : dens)
        if (d < 3) throw std::invalid_argument("denominators must be at least 3, got " + std::to_string(d));
    std::sort(dens.begin(), dens.end());
    dens.erase(std::unique(dens.begin(), dens.end()), dens.end());
    DenominatorSpec s;
    s.kind = Kind::FixedSet;
    s.dens = std::move(dens);
    s.max_lcm = lcm_of(s.dens);
    return s;
}

std::vector<std::int64_t> DenominatorSpec::levels() const {
    if (kind == Kind::FixedSet) return {max_lcm};
    std::vector<std::int64_t> out;
    for (std::int64_t n = 3; n <= max_lcm; ++n) out.push_back(n);
    return out;
}

std::string DenominatorSpec::str() const {
    if (kind == Kind::MaxLcm) return "max-lcm:" + std::to_string(max_lcm);
    std::string s = "den-set:";
    for (std::size_t i = 0; i < dens.size(); ++i) s += (i ? "," : "") + std::to_string(dens[i]);
    return s;
}

DenominatorSpec DenominatorSpec::parse(const std::string& text) {
    auto colon = text.find(':');
    if (colon == std::string::npos) throw std::invalid_argument("bad denominator spec: " + text);
    const std::string head = text.substr(0, colon);
    const std::string body = text.substr(colon + 1);
    try {
        if (head == "max-lcm") {
            std::size_t used = 0;
            auto D = std::stoll(body, &used);
            if (used != body.size()) throw std::invalid_argument(body);
            return make_max_lcm(D);
        }
        if (head == "den-set") {
            std::vector<std::int64_t> dens;
            std::stringstream ss(body);
            std::string item;
            while (std::getline(ss, item, ',')) {
                std::size_t used = 0;
                dens.push_back(std::stoll(item, &used));
                if (used != item.size()) throw std::invalid_argument(item);
            }
            return make_fixed(std::move(dens));
        }
    } catch (const std::logic_error&) {
        throw std::invalid_argument("bad denominator spec: " + text);
    }
    throw std::invalid_argument("bad denominator spec: " + text);
}

std::vector<RationalAngle> candidate_angles(std::int64_t N) {
    std::vector<std::int64_t> dens;
    for (auto d : divisors(N))
        if (d >= 3) dens.push_back(d);
    return angles_with_dens(dens);
}

std::vector<std::pair<RationalAngle, BasisVector>> enumerate_candidates(std::int64_t N) {
    std::vector<std::pair<RationalAngle, BasisVector>> out;
    for (const auto& x : candidate_angles(N)) out.emplace_back(x, tan_vector(x, N));
    return out;
}

bool verify_solution(const Tuple5& t) {
    if (t.sign != 1 && t.sign != -1) throw std::invalid_argument("verify_solution: sign must be +1 or -1");
    std::int64_t L = 1;
    std::array<RationalAngle, 5> mag;
    int real_sign = t.sign;
    for (int i = 0; i < 5; ++i) {
        const auto& x = t.x[i];
        mag[i] = x.num < 0 ? -x : x;
        if (!in_open_quadrant(mag[i]))
            throw std::invalid_argument("verify_solution: entry outside (-pi/2, pi/2) \\ {0}: " + x.str());
        if (i > 0 && x.num < 0) real_sign = -real_sign;
        L = lcm64(L, x.den);
    }
    BasisVector v = 2 * tan_vector(mag[0], L);
    for (int i = 1; i < 5; ++i) v -= tan_vector(mag[i], L);
    const bool exact = v.is_zero() && real_sign == 1;

    const auto bits = default_precision_bits();
    BigFloat acc = log_abs_tan(mag[0], bits);
    acc.mul_si(2);
    for (int i = 1; i < 5; ++i) acc -= log_abs_tan(mag[i], bits);
    if (v.is_zero() != numerically_zero(acc))
        throw std::logic_error("verify_solution: numeric check disagrees with the exact verdict for " + t.str());
    return exact;
}

std::vector<Tuple5> search_level(const DenominatorSpec& spec, std::int64_t level, int sign) {
    if (sign != 1 && sign != -1) throw std::invalid_argument("search: sign must be +1 or -1");
    // The twisted equation has no solutions with all entries in (0, pi/2).
    if (sign == -1) return {};
    std::vector<RationalAngle> angles;
    if (spec.kind == DenominatorSpec::Kind::FixedSet) {
        if (level != spec.max_lcm) throw std::invalid_argument("search_level: level is not lcm of the set");
        angles = angles_with_dens(spec.dens);
    } else {
        angles = candidate_angles(level);
    }
    if (angles.empty()) return {};
    const LevelData L = prepare_level(level, angles);
    const auto pairs = build_pairs(L);

    std::vector<Tuple5> out;
    for (std::size_t x0 = 0; x0 < angles.size(); ++x0) {
        const std::uint64_t h0 = 2 * L.hash[x0];
        for (const auto& p : pairs) {
            const std::uint64_t target = h0 - p.h;
            auto it = std::lower_bound(pairs.begin(), pairs.end(), PairEntry{target, p.j, 0});
            for (; it != pairs.end() && it->h == target; ++it) {
                if (spec.kind == DenominatorSpec::Kind::MaxLcm) {
                    std::int64_t l = lcm64(lcm64(angles[x0].den, angles[p.i].den),
                                           lcm64(angles[p.j].den, lcm64(angles[it->i].den, angles[it->j].den)));
                    if (l != level) continue;
                }
                if (!relation_holds(L, {{x0, 2}, {p.i, -1}, {p.j, -1}, {it->i, -1}, {it->j, -1}})) continue;
                Tuple5 t;
                t.x = {angles[x0], angles[p.i], angles[p.j], angles[it->i], angles[it->j]};
                t.sign = 1;
                out.push_back(t);
            }
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

SearchReport search(const DenominatorSpec& spec, const SearchOptions& options) {
    const auto start = std::chrono::steady_clock::now();
    SearchReport report;
    report.spec = spec;
    report.sign = options.sign;
    const auto levels = spec.levels();
    report.levels_total = levels.size();

    std::map<std::int64_t, std::vector<Tuple5>> done;
    if (options.checkpoint) {
        const auto& path = *options.checkpoint;
        if (options.resume && std::filesystem::exists(path)) {
            auto data = checkpoint_load(path);
            if (!(data.spec == spec) || data.sign != options.sign)
                throw std::runtime_error("checkpoint " + path + " was written for " + data.spec.str() + " sign " +
                                         std::to_string(data.sign) + ", not " + spec.str() + " sign " +
                                         std::to_string(options.sign));
            done = std::move(data.levels);
            report.levels_resumed = done.size();
        } else {
            checkpoint_write_header(path, spec, options.sign);
        }
    }

    std::vector<std::int64_t> todo;
    for (auto n : levels)
        if (!done.count(n)) todo.push_back(n);

    std::vector<std::vector<Tuple5>> results(todo.size());
    std::atomic<std::size_t> next{0};
    std::mutex io;
    std::exception_ptr failure;
    auto worker = [&] {
        while (true) {
            std::size_t k = next.fetch_add(1);
            if (k >= todo.size()) return;
            try {
                results[k] = search_level(spec, todo[k], options.sign);
                std::lock_guard lock(io);
                if (options.checkpoint) checkpoint_append_level(*options.checkpoint, todo[k], results[k]);
                if (options.on_level) options.on_level(todo[k], results[k].size());
            } catch (...) {
                std::lock_guard lock(io);
                if (!failure) failure = std::current_exception();
                next.store(todo.size());
                return;
            }
        }
    };
    const unsigned jobs = std::max(1U, options.jobs);
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> threads;
        for (unsigned t = 0; t < jobs; ++t) threads.emplace_back(worker);
        for (auto& th : threads) th.join();
    }
    if (failure) std::rethrow_exception(failure);

    for (std::size_t k = 0; k < todo.size(); ++k) done[todo[k]] = std::move(results[k]);
    for (auto& [level, sols] : done) {
        for (auto& t : sols) {
            ++report.per_lcm[tuple_lcm(t)];
            report.solutions.push_back(t);
        }
    }
    std::sort(report.solutions.begin(), report.solutions.end());
    report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

std::string Tuple6::str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < x.size(); ++i) s += (i ? "," : "") + x[i].str();
    return s + ")";
}

std::vector<Tuple6> search_sixvar(const DenominatorSpec& spec) {
    if (spec.kind != DenominatorSpec::Kind::FixedSet)
        throw std::invalid_argument("search_sixvar: a fixed denominator set is required");
    const auto angles = angles_with_dens(spec.dens);
    if (angles.empty()) return {};
    const LevelData L = prepare_level(spec.max_lcm, angles);
    const auto pairs = build_pairs(L);
    const auto n = static_cast<std::uint32_t>(angles.size());

    struct TripleEntry {
        std::uint64_t h;
        std::uint32_t k, l, m;
        bool operator<(const TripleEntry& o) const {
            return std::tie(h, k, l, m) < std::tie(o.h, o.k, o.l, o.m);
        }
    };
    std::vector<TripleEntry> triples;
    for (std::uint32_t k = 0; k < n; ++k)
        for (std::uint32_t l = k; l < n; ++l)
            for (std::uint32_t m = l; m < n; ++m) triples.push_back({L.hash[k] + L.hash[l] + L.hash[m], k, l, m});
    std::sort(triples.begin(), triples.end());

    std::vector<Tuple6> out;
    for (std::uint32_t x0 = 0; x0 < n; ++x0) {
        for (const auto& p : pairs) {
            const std::uint64_t target = 2 * L.hash[x0] - p.h;
            auto it = std::lower_bound(triples.begin(), triples.end(), TripleEntry{target, p.j, 0, 0});
            for (; it != triples.end() && it->h == target; ++it) {
                if (!relation_holds(L, {{x0, 2}, {p.i, -1}, {p.j, -1}, {it->k, -1}, {it->l, -1}, {it->m, -1}}))
                    continue;
                out.push_back({{angles[x0], angles[p.i], angles[p.j], angles[it->k], angles[it->l], angles[it->m]}});
            }
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<std::vector<RationalAngle>> solve_reduced(ReducedEquation eq, const std::vector<std::int64_t>& dens) {
    const auto spec = DenominatorSpec::make_fixed(dens);
    const auto angles = angles_with_dens(spec.dens);
    std::vector<std::vector<RationalAngle>> out;
    if (angles.empty()) return out;
    const LevelData L = prepare_level(spec.max_lcm, angles);
    const std::size_t n = angles.size();
    switch (eq) {
        case ReducedEquation::Red20:
            for (std::size_t i = 0; i < n; ++i)
                if (L.hash[i] == 0 && relation_holds(L, {{i, 2}})) out.push_back({angles[i]});
            break;
        case ReducedEquation::Red22:
        case ReducedEquation::Red3: {
            const std::int64_t c1 = eq == ReducedEquation::Red22 ? 2 : 4;
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    if (2 * L.hash[i] == static_cast<std::uint64_t>(c1) * L.hash[j] &&
                        relation_holds(L, {{i, 2}, {j, -c1}}))
                        out.push_back({angles[i], angles[j]});
            break;
        }
        case ReducedEquation::Red2:
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    for (std::size_t k = j; k < n; ++k)
                        if (2 * L.hash[i] == 2 * L.hash[j] + 2 * L.hash[k] &&
                            relation_holds(L, {{i, 2}, {j, -2}, {k, -2}}))
                            out.push_back({angles[i], angles[j], angles[k]});
            break;
    }
    return out;
}

SignDecorations generalize_signs(const Tuple5& t) {
    SignDecorations out;
    for (int mask = 0; mask < 32; ++mask) {
        Tuple5 d = t;
        int sign = t.sign;
        for (int i = 0; i < 5; ++i) {
            if (mask & (1 << i)) {
                d.x[i] = -d.x[i];
                if (i > 0) sign = -sign;
            }
        }
        d.sign = sign;
        (sign == t.sign ? out.plus : out.minus).push_back(d);
    }
    return out;
}

namespace {

constexpr int kCheckpointFormat = 1;

nlohmann::json tuple_json(const Tuple5& t) {
    nlohmann::json a = nlohmann::json::array();
    for (const auto& x : t.x) a.push_back(x.str());
    return a;
}

}  // namespace

void checkpoint_write_header(const std::string& path, const DenominatorSpec& spec, int sign) {
    std::ofstream out(path, std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write checkpoint " + path);
    nlohmann::json h = {{"type", "header"}, {"format", kCheckpointFormat}, {"spec", spec.str()}, {"sign", sign}};
    out << h.dump() << '\n';
}

void checkpoint_append_level(const std::string& path, std::int64_t level, const std::vector<Tuple5>& sols) {
    std::ofstream out(path, std::ios::app);
    if (!out) throw std::runtime_error("cannot append to checkpoint " + path);
    nlohmann::json j = {{"type", "level"}, {"level", level}, {"solutions", nlohmann::json::array()}};
    for (const auto& t : sols) j["solutions"].push_back(tuple_json(t));
    out << j.dump() << '\n';
    out.flush();
    if (!out) throw std::runtime_error("write to checkpoint " + path + " failed");
}

CheckpointData checkpoint_load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open checkpoint " + path);
    CheckpointData data;
    std::string line;
    std::size_t lineno = 0;
    auto fail = [&](const std::string& why) -> std::runtime_error {
        return std::runtime_error("corrupt checkpoint " + path + " line " + std::to_string(lineno) + ": " + why);
    };
    bool have_header = false;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(line);
        } catch (const nlohmann::json::exception& e) {
            throw fail(e.what());
        }
        try {
            const auto type = j.at("type").get<std::string>();
            if (!have_header) {
                if (type != "header") throw fail("missing header");
                if (j.at("format").get<int>() != kCheckpointFormat) throw fail("unsupported format");
                data.spec = DenominatorSpec::parse(j.at("spec").get<std::string>());
                data.sign = j.at("sign").get<int>();
                if (data.sign != 1 && data.sign != -1) throw fail("bad sign");
                have_header = true;
                continue;
            }
            if (type != "level") throw fail("unexpected record type " + type);
            const auto level = j.at("level").get<std::int64_t>();
            const auto levels = data.spec.levels();
            if (!std::binary_search(levels.begin(), levels.end(), level)) throw fail("level outside the denominator spec");
            if (data.levels.count(level)) throw fail("duplicate level " + std::to_string(level));
            std::vector<Tuple5> sols;
            for (const auto& row : j.at("solutions")) {
                if (!row.is_array() || row.size() != 5) throw fail("solution is not a 5-tuple");
                Tuple5 t;
                t.sign = data.sign;
                for (std::size_t i = 0; i < 5; ++i) {
                    t.x[i] = parse_angle(row[i].get<std::string>());
                    if (!in_open_quadrant(t.x[i])) throw fail("angle outside (0, pi/2)");
                }
                const auto l = tuple_lcm(t);
                if (data.spec.kind == DenominatorSpec::Kind::MaxLcm ? l != level : level % l != 0)
                    throw fail("solution lcm does not match its level");
                sols.push_back(t);
            }
            data.levels.emplace(level, std::move(sols));
        } catch (const nlohmann::json::exception& e) {
            throw fail(e.what());
        } catch (const std::invalid_argument& e) {
            throw fail(e.what());
        }
    }
    if (!have_header) throw std::runtime_error("corrupt checkpoint " + path + ": empty file");
    return data;
}

}  // namespace lhuilier
