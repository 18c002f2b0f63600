#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "lhuilier/basis.hpp"

namespace lhuilier {

// Combinatorial data of v(N, a) for N = 4n or N = n with n odd, squarefree and
// not prime. Component indices are 0-based; the components with p in {2, 3}
// come first and are the fixed ones. Every field refers to the normalized
// index a' = epsilon * a.
struct ClusterData {
    std::int64_t level = 0;
    std::int64_t a = 0;            // input index
    std::int64_t normalized = 0;   // epsilon * a mod level
    int epsilon = 1;
    int ell = 0;                   // number of prime components
    int delta = 0;                 // number of components with p in {2, 3}
    int len = 0;                   // length of the prefix with components equal to +-1
    int tau = 0;                   // 0-based: len when len < ell, else ell - 1
    std::vector<std::int64_t> modulus;  // 4 for the 2-component, p otherwise
    std::vector<std::int64_t> value;    // normalized component values mod modulus
    std::set<int> pol;       // components equal to modulus - 1
    std::set<int> pol_bar;   // poles with index < len
    std::set<int> pol_hat;   // poles with index >= len
    int pmin = 0;            // smallest pole in [delta, len), or ell when none
    std::set<int> E_set;     // equals pol for the normalized index
    std::set<int> F_set;     // components equal to 1
    int e_count = 0;
    int f_count = 0;

    bool is_pole(int s) const { return value[s] == modulus[s] - 1; }
    // Number of E-set members in (delta, r], 1-based counting as in ord(r).
    int ord(int r) const;
};

// Throws std::invalid_argument when level is not 4n or n of the required shape
// or gcd(a, level) != 1.
ClusterData cluster_data(std::int64_t level, std::int64_t a);

struct GammaSet {
    std::string name;
    int sign = 1;
    std::set<std::int64_t> indices;  // indices of v(level, b), each in B_level
};

struct ClosedForm {
    ClusterData data;
    std::string case_label;  // basic0, fl, midgt, mile, ones, odd1, fuev, sfoa
    std::vector<GammaSet> gammas;
    BasisVector vector;      // relative coordinates over B_level only
};

// Dispatches to the matching closed form. Throws std::logic_error when no case
// guard matches, when two Gamma sets intersect, or when an emitted element is
// outside B_level.
ClosedForm closed_form(std::int64_t level, std::int64_t a);

inline BasisVector closed_form_represent(std::int64_t level, std::int64_t a) {
    return closed_form(level, a).vector;
}

// Non-squarefree variant: level 4n with n odd non-squarefree, an odd
// non-squarefree level, or a level divisible by 8. Relative coordinates.
BasisVector nonsquarefree_closed_form(std::int64_t level, std::int64_t a);

bool is_squarefree_closed_form_level(std::int64_t level);
bool is_nonsquarefree_closed_form_level(std::int64_t level);

}  // namespace lhuilier
