#include <stdexcept>

#include "lhuilier/closed_forms.hpp"

namespace lhuilier {

bool is_nonsquarefree_closed_form_level(std::int64_t level) {
    if (level < 8) return false;
    if (level % 8 == 0) return true;
    std::int64_t n = level % 4 == 0 ? level / 4 : level;
    return n % 2 == 1 && n >= 9 && !is_squarefree(n);
}

BasisVector nonsquarefree_closed_form(std::int64_t level, std::int64_t a) {
    if (!is_nonsquarefree_closed_form_level(level))
        throw std::invalid_argument("nonsquarefree_closed_form: unsupported level");
    a = mod_floor(a, level);
    if (gcd64(a, level) != 1) throw std::invalid_argument("nonsquarefree_closed_form: index not coprime to level");

    auto fac = factorize(level);
    std::size_t mu = 0;
    if (level % 8 != 0) {
        for (std::size_t i = 0; i < fac.size(); ++i)
            if (fac[i].p != 2 && fac[i].e >= 2) {
                mu = i;
                break;
            }
    }
    auto rf = residue_form(level, a);
    const auto& cm = rf.components[mu];
    int epsilon = 2 * cm.hat < ipow(cm.p, cm.e - 1) ? 1 : -1;
    auto na = mod_floor(epsilon * a, level);
    rf = residue_form(level, na);

    // Each pole (bar = p - 1) frees its bar component; everything else is pinned.
    std::vector<std::vector<std::int64_t>> choices;
    int poles = 0;
    for (const auto& c : rf.components) {
        std::vector<std::int64_t> opts;
        if (c.bar == c.p - 1) {
            ++poles;
            std::int64_t lo = c.e == 1 ? 1 : 0;
            for (std::int64_t b = lo; b <= c.p - 2; ++b) opts.push_back(c.e == 1 ? b : b * ipow(c.p, c.e - 1) + c.hat);
        } else {
            opts.push_back(c.residue());
        }
        choices.push_back(std::move(opts));
    }

    const int sign = poles % 2 == 0 ? 1 : -1;
    BasisVector v(level);
    std::vector<std::size_t> idx(choices.size(), 0);
    while (true) {
        ResidueForm f;
        f.level = level;
        for (std::size_t s = 0; s < choices.size(); ++s) {
            ResidueComponent c = rf.components[s];
            std::int64_t r = choices[s][idx[s]];
            std::int64_t low = ipow(c.p, c.e - 1);
            c.hat = r % low;
            c.bar = r / low;
            f.components.push_back(c);
        }
        std::int64_t b = residue_to_index(f);
        if (!in_relative_basis(level, b))
            throw std::logic_error("nonsquarefree_closed_form: v(" + std::to_string(level) + "," + std::to_string(b) +
                                   ") is outside the basis");
        if (v.multiplicity({level, b}) != 0) throw std::logic_error("nonsquarefree_closed_form: repeated element");
        v.add({level, b}, sign);
        std::size_t s = 0;
        while (s < choices.size()) {
            if (++idx[s] < choices[s].size()) break;
            idx[s] = 0;
            ++s;
        }
        if (s == choices.size()) break;
    }
    return v;
}

}  // namespace lhuilier
