#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "lhuilier/bigfloat.hpp"
#include "lhuilier/residue.hpp"

namespace lhuilier {

// The cyclotomic number v(level, index) viewed as a member of Conrad's basis.
struct BasisElement {
    std::int64_t level = 0;
    std::int64_t index = 0;

    ResidueForm residue() const { return residue_form(level, index); }
    std::string str() const;  // level:index

    friend auto operator<=>(const BasisElement&, const BasisElement&) = default;
};

// Sparse integer exponent vector over Conrad's basis of X^level.
class BasisVector {
public:
    BasisVector() = default;
    explicit BasisVector(std::int64_t level) : level_(level) {}

    std::int64_t level() const { return level_; }
    const std::map<BasisElement, std::int64_t>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add(const BasisElement& b, std::int64_t coef);
    BasisVector& operator+=(const BasisVector& o);
    BasisVector& operator-=(const BasisVector& o);
    BasisVector& operator*=(std::int64_t k);

    std::int64_t multiplicity(const BasisElement& b) const;
    std::set<BasisElement> support() const;
    // Sum of the exponents at basis elements of level d.
    std::int64_t deg_level(std::int64_t d) const;
    // Keeps only the coordinates at basis elements of level d.
    BasisVector restrict_to_level(std::int64_t d) const;

    std::string str() const;  // "level:index^exp" terms joined by spaces, "0" when empty

    friend bool operator==(const BasisVector&, const BasisVector&) = default;

private:
    std::int64_t level_ = 0;
    std::map<BasisElement, std::int64_t> terms_;
};

BasisVector operator+(BasisVector a, const BasisVector& b);
BasisVector operator-(BasisVector a, const BasisVector& b);
BasisVector operator*(std::int64_t k, BasisVector v);

// Membership of v(d, a) in the relative basis B_d. Always false for d = 4.
bool in_relative_basis(std::int64_t d, std::int64_t a);

// B_d ordered by index; empty for d = 4.
std::vector<BasisElement> relative_basis(std::int64_t d);

// Basis of X^n: the union of B_d over divisors d >= 2, with v(4,1) replacing
// B_2 and B_4 when 4 | n. Ordered by level, then index.
std::vector<BasisElement> conrad_basis(std::int64_t n);

// Presentation of X^n by the generators v(n,a), 1 <= a <= n/2, and the
// distribution relations, with coordinates of every generator in Conrad's basis.
class Presentation {
public:
    std::int64_t level() const { return level_; }
    const std::vector<BasisElement>& basis() const { return basis_; }
    std::size_t rank() const { return basis_.size(); }
    std::size_t generator_count() const { return coords_.size(); }
    std::size_t relation_count() const { return relation_count_; }
    std::size_t relation_rank() const { return relation_rank_; }

    // Position of b in basis(), or -1.
    int position(const BasisElement& b) const;

    // Coordinates of v(level, a) as (basis position, exponent) pairs.
    const std::vector<std::pair<int, std::int64_t>>& coordinates(std::int64_t a) const;

    // dense[pos] += coef * coordinate, dense sized rank().
    void accumulate(std::int64_t a, std::int64_t coef, std::vector<std::int64_t>& dense) const;

    BasisVector represent(std::int64_t a) const;
    BasisVector from_dense(const std::vector<std::int64_t>& dense) const;

private:
    friend Presentation build_presentation(std::int64_t n);

    std::int64_t level_ = 0;
    std::vector<BasisElement> basis_;
    std::map<BasisElement, int> position_;
    std::vector<std::vector<std::pair<int, std::int64_t>>> coords_;  // indexed by a - 1
    std::size_t relation_count_ = 0;
    std::size_t relation_rank_ = 0;
};

// Builds and verifies the presentation; throws std::logic_error when the
// relation rank or the exact relation check disagrees with Conrad's basis.
Presentation build_presentation(std::int64_t n);

// Cached, thread-safe access to build_presentation(n).
const Presentation& presentation(std::int64_t n);

// Coordinates of v(n, a); throws std::invalid_argument when n | a.
BasisVector represent(std::int64_t n, std::int64_t a);

// Re-expresses v (level m) in the basis of X^n for m | n.
BasisVector lift(const BasisVector& v, std::int64_t n);

// Product of |1 - zeta_d^a|^e over the terms of v.
BigFloat numeric_magnitude(const BasisVector& v, mpfr_prec_t precision_bits);
BigFloat numeric_log_magnitude(const BasisVector& v, mpfr_prec_t precision_bits);

}  // namespace lhuilier
