#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lhuilier/angle.hpp"

namespace lhuilier {

struct FamilyId {
    int i = 1;
    int j = 1;
    std::string str() const;  // "Phi_{i,j}"
    friend auto operator<=>(const FamilyId&, const FamilyId&) = default;
};

// I = {(1,1),(1,2),(2,1),(2,2),(2,3),(2,4),(2,5),(3,1),(3,2)} in scan order.
const std::vector<FamilyId>& family_ids();
// Throws std::invalid_argument for pairs outside I.
FamilyId parse_family_id(const std::string& text);  // "1,1", "11" or "Phi_{1,1}"

// Number of rational parameters: 2 for (1,1) and (1,2), 1 otherwise.
int family_param_count(FamilyId id);
// Parameter range of the base set Phi-bar_{i,j}; t is ignored for one-parameter families.
bool family_params_valid(FamilyId id, const Rational& s, const Rational& t = Rational{});
// The member of Phi-bar_{i,j} with parameters (s, t); throws std::invalid_argument out of range.
Tuple5 instantiate(FamilyId id, const Rational& s, const Rational& t = Rational{});
// theta . Phi_{i,j} as a family.
FamilyId theta_image(FamilyId id);

struct FamilyMatch {
    FamilyId id;
    Rational s;
    std::optional<Rational> t;  // two-parameter families only
    Perm4 perm = {0, 1, 2, 3};  // s4_act(perm, instantiate(id, s, t)) reproduces the input
};

// First match in scan order: families in family_ids() order, then permutations
// in all_perms() order.
std::optional<FamilyMatch> phi_member(const Tuple5& t);

// The 61 representatives of the sporadic set as printed, grouped by lcm heading.
struct SporadicRow {
    int index = 0;             // 0-based position in the printed table
    std::int64_t heading = 0;  // lcm heading of its block
    Tuple5 tuple;
};
const std::vector<SporadicRow>& sporadic_table();

struct RowCheck {
    SporadicRow row;
    bool in_range = false;        // all entries in (0, pi/2)
    bool verified = false;        // exact equation check
    bool representative = false;  // condition (i) or (ii) for orbit representatives
    bool lcm_matches = false;     // tuple lcm equals the heading
    std::string reason;           // empty when the row is accepted
    std::vector<Tuple5> corrections;  // tuples at the heading lcm agreeing in four coordinates
    bool flagged() const { return !reason.empty(); }
};
struct TableReport {
    std::vector<RowCheck> rows;
    std::size_t flagged_count() const;
};
// Verifies every row; with fix_search, flagged rows get replacement candidates
// from an exhaustive search over the heading lcm with the other four entries fixed.
TableReport verify_table(const std::vector<SporadicRow>& table, bool fix_search);

// Orbit representatives in use: accepted rows, plus the unique verified
// correction of each flagged row. Cached after the first call.
struct SporadicRep {
    int index = 0;
    Tuple5 tuple;
    bool corrected = false;
};
const std::vector<SporadicRep>& sporadic_reps();

// All Z/2 x S4 images of the given representatives, deduplicated and sorted.
std::vector<Tuple5> expand_orbits(const std::vector<SporadicRep>& reps);

struct ClassLabel {
    enum class Kind { Family, Sporadic, Unknown };
    Kind kind = Kind::Unknown;
    std::optional<FamilyMatch> family;
    int row = -1;  // sporadic row index
    GroupElement group_elem;  // act(group_elem, row tuple) reproduces the input
    bool corrected_row = false;
    bool also_sporadic = false;  // family member that also lies in the sporadic set
    std::string kind_str() const;  // "family", "sporadic", "unknown"
};
// Family if phi_member matches, else Sporadic when the tuple lies in the
// expanded sporadic set, else Unknown. The sign field is ignored.
ClassLabel classify(const Tuple5& t);

// Affine one-parameter set {base + u * dir : u in the interval}; a point when dir is zero.
struct Omega3Branch {
    Perm4 perm = {0, 1, 2, 3};
    std::array<Rational, 5> base{};
    std::array<Rational, 5> dir{};
    Rational lo, hi;
    bool lo_closed = false;
    bool hi_closed = false;
    bool is_point() const;
    bool contains(const Tuple5& t) const;
    Tuple5 at(const Rational& u) const;
    std::string str() const;
};
// Phi_{i,j} intersected with Omega_3, as a union of branches over all tail
// permutations of the pattern. Duplicate branches are removed.
std::vector<Omega3Branch> family_omega3_intersection(FamilyId id);
bool omega3_branches_contain(const std::vector<Omega3Branch>& branches, const Tuple5& t);

// Members of the expanded sporadic set lying in Omega_3, sorted.
std::vector<Tuple5> sporadic_omega3();

}  // namespace lhuilier
