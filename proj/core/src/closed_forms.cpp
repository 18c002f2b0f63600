#include "lhuilier/closed_forms.hpp"

#include <functional>
#include <stdexcept>

namespace lhuilier {

int ClusterData::ord(int r) const {
    int count = 0;
    for (int s : E_set)
        if (s >= delta && s <= r) ++count;
    return count;
}

bool is_squarefree_closed_form_level(std::int64_t level) {
    if (level < 15) return false;
    std::int64_t n = level % 4 == 0 ? level / 4 : level;
    if (n % 2 == 0) return false;
    return is_squarefree(n) && !is_prime(n) && n > 3;
}

ClusterData cluster_data(std::int64_t level, std::int64_t a) {
    if (!is_squarefree_closed_form_level(level))
        throw std::invalid_argument("cluster_data: level must be 4n or n with n odd, squarefree and not prime");
    if (gcd64(mod_floor(a, level), level) != 1) throw std::invalid_argument("cluster_data: index not coprime to level");

    ClusterData d;
    d.level = level;
    d.a = mod_floor(a, level);
    auto fac = factorize(level);
    d.ell = static_cast<int>(fac.size());
    for (const auto& pp : fac) {
        d.modulus.push_back(pp.p == 2 ? 4 : pp.p);
        if (pp.p == 2 || pp.p == 3) ++d.delta;
    }

    auto values_of = [&](std::int64_t idx) {
        std::vector<std::int64_t> v;
        for (auto q : d.modulus) v.push_back(mod_floor(idx, q));
        return v;
    };

    // epsilon from the first free component (delta < ell for composite n).
    {
        auto raw = values_of(d.a);
        std::int64_t p = d.modulus[static_cast<std::size_t>(d.delta)];
        std::int64_t x = raw[static_cast<std::size_t>(d.delta)];
        bool upper = x >= (p + 1) / 2 && x <= p - 2;
        d.epsilon = (upper || x == 1) ? 1 : -1;
    }
    d.normalized = mod_floor(d.epsilon * d.a, level);
    d.value = values_of(d.normalized);

    d.len = 0;
    while (d.len < d.ell) {
        auto s = static_cast<std::size_t>(d.len);
        if (d.value[s] == 1 || d.value[s] == d.modulus[s] - 1)
            ++d.len;
        else
            break;
    }
    d.tau = d.len < d.ell ? d.len : d.ell - 1;

    for (int s = 0; s < d.ell; ++s) {
        if (d.is_pole(s)) {
            d.pol.insert(s);
            (s < d.len ? d.pol_bar : d.pol_hat).insert(s);
        }
        if (d.value[static_cast<std::size_t>(s)] == 1) d.F_set.insert(s);
    }
    d.E_set = d.pol;
    d.e_count = static_cast<int>(d.E_set.size());
    d.f_count = static_cast<int>(d.F_set.size());
    d.pmin = d.ell;
    for (int s : d.pol_bar)
        if (s >= d.delta) {
            d.pmin = s;
            break;
        }
    return d;
}

namespace {

using Box = std::vector<std::vector<std::int64_t>>;

struct Builder {
    const ClusterData& d;
    std::vector<std::int64_t> crt;

    explicit Builder(const ClusterData& data) : d(data) {
        for (auto q : d.modulus) {
            std::int64_t rest = d.level / q;
            crt.push_back(mod_floor(rest * mod_inverse(rest % q, q), d.level));
        }
    }

    std::int64_t p(int s) const { return d.modulus[static_cast<std::size_t>(s)]; }
    std::int64_t val(int s) const { return d.value[static_cast<std::size_t>(s)]; }
    bool pole(int s) const { return d.is_pole(s); }
    bool free(int s) const { return s >= d.delta; }

    static std::vector<std::int64_t> range(std::int64_t lo, std::int64_t hi) {
        std::vector<std::int64_t> v;
        for (auto x = lo; x <= hi; ++x) v.push_back(x);
        return v;
    }
    std::vector<std::int64_t> U(int s) const { return range((p(s) + 1) / 2, p(s) - 2); }
    std::vector<std::int64_t> L(int s) const { return range(2, (p(s) - 1) / 2); }
    std::vector<std::int64_t> R(int s) const { return range(1, p(s) - 2); }
    std::vector<std::int64_t> O(int s) const {
        auto v = U(s);
        v.insert(v.begin(), 1);
        return v;
    }
    static std::vector<std::int64_t> one() { return {1}; }
    static std::vector<std::int64_t> just(std::int64_t x) { return {x}; }

    // Box whose fixed components are 1 and whose free components come from f(s).
    Box box(const std::function<std::vector<std::int64_t>(int)>& f) const {
        Box b(static_cast<std::size_t>(d.ell));
        for (int s = 0; s < d.ell; ++s) b[static_cast<std::size_t>(s)] = free(s) ? f(s) : one();
        return b;
    }

    std::set<std::int64_t> enumerate(const Box& b) const {
        std::set<std::int64_t> out;
        for (const auto& comp : b)
            if (comp.empty()) return out;
        std::vector<std::size_t> idx(b.size(), 0);
        while (true) {
            __int128 acc = 0;
            for (std::size_t s = 0; s < b.size(); ++s) acc += static_cast<__int128>(b[s][idx[s]]) * crt[s];
            out.insert(static_cast<std::int64_t>(acc % d.level));
            std::size_t s = 0;
            while (s < b.size()) {
                if (++idx[s] < b[s].size()) break;
                idx[s] = 0;
                ++s;
            }
            if (s == b.size()) break;
        }
        return out;
    }

    std::int64_t all_ones() const {
        std::vector<std::int64_t> ones(static_cast<std::size_t>(d.ell), 1);
        __int128 acc = 0;
        for (std::size_t s = 0; s < ones.size(); ++s) acc += crt[s];
        return static_cast<std::int64_t>(acc % d.level);
    }
};

std::set<std::int64_t> minus(const std::set<std::int64_t>& a, const std::set<std::int64_t>& b) {
    std::set<std::int64_t> out;
    for (auto x : a)
        if (!b.count(x)) out.insert(x);
    return out;
}

void unite(std::set<std::int64_t>& into, const std::set<std::int64_t>& from) { into.insert(from.begin(), from.end()); }

int parity_sign(int k) { return k % 2 == 0 ? 1 : -1; }

}  // namespace

ClosedForm closed_form(std::int64_t level, std::int64_t a) {
    ClosedForm out;
    out.data = cluster_data(level, a);
    const auto& d = out.data;
    Builder B(d);
    const int tau = d.tau;
    const int e = d.e_count;
    const int f = d.f_count;
    auto add = [&](std::string name, int sign, std::set<std::int64_t> idx) {
        out.gammas.push_back({std::move(name), sign, std::move(idx)});
    };

    std::set<int> free_poles;
    for (int s : d.pol)
        if (s >= d.delta) free_poles.insert(s);

    if (d.len < d.ell) {
        std::set<int> polbar_free;
        for (int s : d.pol_bar)
            if (s >= d.delta) polbar_free.insert(s);
        const std::int64_t pt = B.p(tau);
        const std::int64_t vt = B.val(tau);
        const bool upper = vt >= (pt + 1) / 2 && vt <= pt - 2;
        const bool lower = vt >= 2 && vt <= (pt - 1) / 2;

        // Boxes shared by several cases.
        auto gamma1_bar_r = [&](int r) {
            return B.box([&, r](int s) {
                if (s < r) return B.O(s);
                if (s == r) return B.L(s);
                return B.pole(s) ? B.R(s) : Builder::just(B.val(s));
            });
        };
        auto gamma1_hat_r = [&](int r) {
            return B.box([&, r](int s) {
                if (s < r) return B.pole(s) ? B.O(s) : Builder::one();
                if (s == r) return B.L(s);
                return B.pole(s) ? B.R(s) : Builder::just(B.val(s));
            });
        };
        auto gamma2_r = [&](int r) {
            return B.box([&, r](int s) {
                if (s < r) return B.O(s);
                if (s == r) return B.U(s);
                return B.val(s) == 1 ? B.R(s) : Builder::just(B.p(s) - B.val(s));
            });
        };
        auto gamma1_union = [&](const std::set<int>& rs) {
            std::set<std::int64_t> g;
            for (int r : rs) unite(g, minus(B.enumerate(gamma1_bar_r(r)), B.enumerate(gamma1_hat_r(r))));
            return g;
        };

        if (upper && polbar_free.empty()) {
            out.case_label = "basic0";
            add("Gamma", parity_sign(e), B.enumerate(B.box([&](int s) {
                if (s < tau) return Builder::one();
                return B.pole(s) ? B.R(s) : Builder::just(B.val(s));
            })));
        } else if (upper) {
            out.case_label = "midgt";
            add("Gamma1", parity_sign(e + 1), gamma1_union(polbar_free));
            std::set<std::int64_t> g2;
            for (int r : polbar_free) unite(g2, B.enumerate(gamma2_r(r)));
            add("Gamma2", parity_sign(f + 1), g2);
            add("Gamma3", parity_sign(e), B.enumerate(B.box([&](int s) {
                if (s < tau) return B.pole(s) ? B.O(s) : Builder::one();
                return B.pole(s) ? B.R(s) : Builder::just(B.val(s));
            })));
        } else if (lower && polbar_free.empty()) {
            out.case_label = "fl";
            auto bar = B.enumerate(B.box([&](int s) {
                if (s < tau) return B.O(s);
                return B.pole(s) ? B.R(s) : Builder::just(B.val(s));
            }));
            auto hat = B.enumerate(B.box([&](int s) {
                if (s < tau) return Builder::one();
                return B.pole(s) ? B.R(s) : Builder::just(B.val(s));
            }));
            add("Gamma1", parity_sign(e + 1), minus(bar, hat));
            add("Gamma2", parity_sign(f), B.enumerate(B.box([&](int s) {
                if (s < tau) return B.O(s);
                return B.val(s) == 1 ? B.R(s) : Builder::just(B.p(s) - B.val(s));
            })));
        } else if (lower) {
            out.case_label = "mile";
            add("Gamma1", parity_sign(e + 1), gamma1_union(polbar_free));
            std::set<std::int64_t> g2;
            std::set<std::int64_t> hat2_all;
            for (int r : polbar_free) {
                auto bar = B.enumerate(gamma2_r(r));
                auto hat = B.enumerate(B.box([&, r](int s) {
                    if (s < r) return B.O(s);
                    if (s == r) return B.U(s);
                    if (s < tau) return B.val(s) == 1 ? B.O(s) : Builder::one();
                    return B.val(s) == 1 ? B.R(s) : Builder::just(B.p(s) - B.val(s));
                }));
                unite(g2, minus(bar, hat));
                unite(hat2_all, hat);
            }
            add("Gamma2", parity_sign(f + 1), g2);
            auto bar3 = B.enumerate(B.box([&](int s) {
                if (s < tau) return B.O(s);
                return B.pole(s) ? B.R(s) : Builder::just(B.val(s));
            }));
            auto hat3 = B.enumerate(B.box([&](int s) {
                if (s < tau) return B.pole(s) ? B.O(s) : Builder::one();
                return B.pole(s) ? B.R(s) : Builder::just(B.val(s));
            }));
            add("Gamma3", parity_sign(e + 1), minus(bar3, hat3));
            auto bar4 = B.enumerate(B.box([&](int s) {
                if (s < tau) return B.O(s);
                return B.val(s) == 1 ? B.R(s) : Builder::just(B.p(s) - B.val(s));
            }));
            add("Gamma4", parity_sign(f), minus(bar4, hat2_all));
        } else {
            throw std::logic_error("closed_form: no case matches v(" + std::to_string(level) + "," + std::to_string(a) + ")");
        }
    } else {
        const std::int64_t ones = B.all_ones();
        const bool even = d.ell % 2 == 0;
        if (free_poles.empty()) {
            if (even) {
                out.case_label = "ones";
                add("AllOnes", parity_sign(e), {ones});
            } else {
                out.case_label = "odd1";
                add("Gamma", -parity_sign(e), minus(B.enumerate(B.box([&](int s) { return B.O(s); })), {ones}));
            }
        } else {
            auto gamma1_bar_r = [&](int r) {
                return B.box([&, r](int s) {
                    if (s < r) return B.O(s);
                    if (s == r) return B.L(s);
                    return B.pole(s) ? B.R(s) : Builder::one();
                });
            };
            auto gamma1_hat_r = [&](int r) {
                return B.box([&, r](int s) {
                    if (s < r) return B.pole(s) ? B.O(s) : Builder::one();
                    if (s == r) return B.L(s);
                    return B.pole(s) ? B.R(s) : Builder::one();
                });
            };
            auto gamma2_bar_r = [&](int r) {
                return B.box([&, r](int s) {
                    if (s < r) return B.O(s);
                    if (s == r) return B.U(s);
                    return B.pole(s) ? Builder::one() : B.R(s);
                });
            };
            std::set<std::int64_t> g1;
            for (int r : free_poles) unite(g1, minus(B.enumerate(gamma1_bar_r(r)), B.enumerate(gamma1_hat_r(r))));
            auto pole_o_box = minus(B.enumerate(B.box([&](int s) { return B.pole(s) ? B.O(s) : Builder::one(); })), {ones});
            if (even) {
                out.case_label = "fuev";
                add("Gamma1", parity_sign(e + 1), g1);
                std::set<std::int64_t> bar2;
                for (int r : free_poles) unite(bar2, B.enumerate(gamma2_bar_r(r)));
                add("Gamma2", parity_sign(e + 1), minus(bar2, pole_o_box));
                add("AllOnes", parity_sign(e), {ones});
            } else {
                out.case_label = "sfoa";
                add("Gamma1", parity_sign(e + 1), g1);
                std::set<std::int64_t> g2;
                for (int r : free_poles) {
                    auto hat = B.enumerate(B.box([&, r](int s) {
                        if (s < r) return B.O(s);
                        if (s == r) return B.U(s);
                        return B.pole(s) ? Builder::one() : B.O(s);
                    }));
                    unite(g2, minus(B.enumerate(gamma2_bar_r(r)), hat));
                }
                add("Gamma2", parity_sign(e), g2);
                add("Gamma3", parity_sign(e), pole_o_box);
                add("Gamma4", parity_sign(e + 1),
                    minus(B.enumerate(B.box([&](int s) { return B.pole(s) ? Builder::one() : B.O(s); })), {ones}));
            }
        }
    }

    out.vector = BasisVector(level);
    std::set<std::int64_t> seen;
    for (const auto& g : out.gammas) {
        for (auto idx : g.indices) {
            if (!seen.insert(idx).second)
                throw std::logic_error("closed_form: Gamma sets overlap at v(" + std::to_string(level) + "," +
                                       std::to_string(idx) + ") in case " + out.case_label);
            if (!in_relative_basis(level, idx))
                throw std::logic_error("closed_form: v(" + std::to_string(level) + "," + std::to_string(idx) +
                                       ") is outside the basis in case " + out.case_label);
            out.vector.add({level, idx}, g.sign);
        }
    }
    return out;
}

}  // namespace lhuilier
