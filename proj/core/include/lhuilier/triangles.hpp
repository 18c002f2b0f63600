#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lhuilier/angle.hpp"

namespace lhuilier {

// Area E and side lengths a, b, c of a spherical triangle on the unit sphere,
// each stored as a coefficient of pi.
struct Measurement {
    RationalAngle E, a, b, c;
    std::string str() const;  // "(E,a,b,c)"
    friend bool operator==(const Measurement&, const Measurement&) = default;
    friend std::strong_ordering operator<=>(const Measurement& l, const Measurement& r);
};

Measurement make_measurement(const std::string& E, const std::string& a, const std::string& b, const std::string& c);
std::int64_t measurement_lcm(const Measurement& m);

// The quarter-angle tuple (E/4, (a+b-c)/4, (a-b+c)/4, (-a+b+c)/4, (a+b+c)/4).
Tuple5 quarter_angles(const Measurement& m);

// First failing link of 0 < a+b-c <= a-b+c <= -a+b+c < a+b+c < 2pi, if any.
std::optional<std::string> ineq_failure(const Measurement& m);

// Exact L'Huilier relation tan^2(E/4) = product of the four quarter-angle
// tangents. Throws std::domain_error naming the offending quantity when a
// quarter-angle falls outside (0, pi/2).
bool lhuilier_check(const Measurement& m);

// Range, ordering and inequality conditions plus the L'Huilier relation;
// returns the first failing condition, or nullopt for members of Omega_2.
std::optional<std::string> omega2_failure(const Measurement& m);
inline bool omega2_valid(const Measurement& m) { return !omega2_failure(m); }

// Inverse maps between Omega_2 and Omega_3; std::invalid_argument outside the domain.
Tuple5 phi_map(const Measurement& m);
Measurement psi_map(const Tuple5& t);

// Lambda_1: (1,1/2,2/3,2/3), (q,q,1/2,1/2) for 0 < q <= 1/2, (q,1/2,1/2,q) for 1/2 < q < 1.
bool in_lambda1(const Measurement& m);
const std::vector<Measurement>& lambda2();  // the seven rows in printed order
std::string lambda_class(const Measurement& m);  // "Lambda1", "Lambda2" or "none"

// Lambda_1 members with lcm <= D, sorted.
std::vector<Measurement> lambda1_members(std::int64_t D);

// All Omega_2 measurements with lcm <= D, sorted: search at max lcm 4D, keep
// Omega_3 tuples, map by psi.
std::vector<Measurement> search_measurements(std::int64_t D, unsigned jobs = 1);

// All Omega_2 measurements whose four entries have denominator exactly p.
std::vector<Measurement> prime_denominator_check(std::int64_t p);

}  // namespace lhuilier
