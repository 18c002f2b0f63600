#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lhuilier/number_theory.hpp"

namespace lhuilier {

// Component of a residue form at the prime power p^e. For e = 1 only `bar` is
// meaningful (a mod p) and `hat` is 0; for e >= 2 the residue mod p^e is
// bar * p^(e-1) + hat with hat = a mod p^(e-1).
struct ResidueComponent {
    std::int64_t p = 0;
    int e = 0;
    std::int64_t bar = 0;
    std::int64_t hat = 0;

    bool is_pair() const { return e >= 2; }
    std::int64_t modulus() const;  // p^e
    std::int64_t residue() const;  // bar * p^(e-1) + hat
    std::string str() const;

    friend bool operator==(const ResidueComponent&, const ResidueComponent&) = default;
};

struct ResidueForm {
    std::int64_t level = 0;
    std::vector<ResidueComponent> components;

    std::string str() const;  // e.g. ((2,1),2)_45

    friend bool operator==(const ResidueForm&, const ResidueForm&) = default;
};

// Throws std::invalid_argument when n < 2 or n | a.
ResidueForm residue_form(std::int64_t n, std::int64_t a);

// The unique index in [0, n-1] with the given residue form (CRT).
std::int64_t residue_to_index(const ResidueForm& f);

// Builds a residue form at level n from per-component values. A component
// with e = 1 takes {value}; a component with e >= 2 takes {bar, hat}.
ResidueForm make_residue_form(std::int64_t n, const std::vector<std::vector<std::int64_t>>& values);

}  // namespace lhuilier
