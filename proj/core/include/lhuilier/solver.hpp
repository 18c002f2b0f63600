#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lhuilier/angle.hpp"
#include "lhuilier/basis.hpp"

namespace lhuilier {

// MaxLcm(D): all tuples whose denominators have lcm <= D.
// FixedSet(S): all tuples whose denominators lie in S; worked at level lcm(S).
struct DenominatorSpec {
    enum class Kind { MaxLcm, FixedSet };
    Kind kind = Kind::MaxLcm;
    std::int64_t max_lcm = 0;
    std::vector<std::int64_t> dens;  // sorted, unique

    static DenominatorSpec make_max_lcm(std::int64_t D);
    static DenominatorSpec make_fixed(std::vector<std::int64_t> dens);

    std::vector<std::int64_t> levels() const;  // working levels in ascending order
    std::string str() const;                   // "max-lcm:D" or "den-set:a,b,c"
    static DenominatorSpec parse(const std::string& text);

    friend bool operator==(const DenominatorSpec&, const DenominatorSpec&) = default;
};

// All x in (0, pi/2) with den(x) | N and den(x) >= 3, ascending.
std::vector<RationalAngle> candidate_angles(std::int64_t N);

// candidate_angles(N) paired with tan_vector(x, N).
std::vector<std::pair<RationalAngle, BasisVector>> enumerate_candidates(std::int64_t N);

// Exact check of tan^2 x0 = sign * tan x1 tan x2 tan x3 tan x4 for entries in
// (-pi/2, pi/2) \ {0} with denominators >= 3. The magnitudes are compared as
// basis vectors at level lcm, the real signs separately. A high-precision
// numeric check must agree with the exact verdict or std::logic_error is thrown.
// Throws std::invalid_argument for inadmissible entries.
bool verify_solution(const Tuple5& t);

struct SearchOptions {
    int sign = 1;
    unsigned jobs = 1;
    std::optional<std::string> checkpoint;  // JSONL path
    bool resume = false;
    std::function<void(std::int64_t level, std::size_t found)> on_level;  // called after each level
};

struct SearchReport {
    DenominatorSpec spec;
    int sign = 1;
    std::vector<Tuple5> solutions;  // sorted tails, ascending, unique
    std::map<std::int64_t, std::size_t> per_lcm;
    std::size_t levels_total = 0;
    std::size_t levels_resumed = 0;  // levels taken from a checkpoint
    double seconds = 0.0;
    bool complete = true;
};

// Exhaustive search; see DenominatorSpec for the covered range.
SearchReport search(const DenominatorSpec& spec, const SearchOptions& options = {});

// Solutions found at one working level. For MaxLcm only tuples whose lcm equals
// the level are kept; each tuple then appears at exactly one level.
std::vector<Tuple5> search_level(const DenominatorSpec& spec, std::int64_t level, int sign);

// Eq. tan^2 x0 = tan x1 ... tan x5 with denominators in {4, n, 2n, 4n}.
struct Tuple6 {
    std::array<RationalAngle, 6> x{};
    std::string str() const;
    friend auto operator<=>(const Tuple6&, const Tuple6&) = default;
};
std::vector<Tuple6> search_sixvar(const DenominatorSpec& spec);

// Reduced equations over candidates with denominators in dens.
//   Red20: tan^2 x0 = 1          Red22: tan^2 x0 = tan^2 x1
//   Red3:  tan^2 x0 = tan^4 x1   Red2:  tan^2 x0 = tan^2 x1 tan^2 x2
enum class ReducedEquation { Red20, Red22, Red3, Red2 };
std::vector<std::vector<RationalAngle>> solve_reduced(ReducedEquation eq, const std::vector<std::int64_t>& dens);

// The 32 sign decorations (eta_i x_i) of a solution; the sign field records
// prod_{i=1..4} eta_i; each decoration solves the matching equation.
struct SignDecorations {
    std::vector<Tuple5> plus;   // T+: 16 decorations solving the untwisted equation
    std::vector<Tuple5> minus;  // T-: 16 decorations solving the twisted equation
};
SignDecorations generalize_signs(const Tuple5& t);

// Checkpoint file: a header line with the denominator spec and sign, then one line per
// completed level. Loading validates the header and every line.
struct CheckpointData {
    DenominatorSpec spec;
    int sign = 1;
    std::map<std::int64_t, std::vector<Tuple5>> levels;
};
void checkpoint_write_header(const std::string& path, const DenominatorSpec& spec, int sign);
void checkpoint_append_level(const std::string& path, std::int64_t level, const std::vector<Tuple5>& sols);
// Throws std::runtime_error with a diagnostic on a missing or corrupt file.
CheckpointData checkpoint_load(const std::string& path);

}  // namespace lhuilier
