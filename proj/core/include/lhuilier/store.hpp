#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "lhuilier/families.hpp"
#include "lhuilier/solver.hpp"
#include "lhuilier/triangles.hpp"

namespace lhuilier {

// Run parameters written at the top of every report.
struct RunConfig {
    std::string subcommand;
    std::string spec;  // DenominatorSpec::str()
    int sign = 1;
    bool six = false;
    unsigned jobs = 1;  // not serialized
    std::string output;
    std::string checkpoint;
    long precision_bits = 128;
};

// Number of distinct orderings of the tail x1..x4.
std::size_t tail_arrangements(const Tuple5& t);

struct SolutionRecord {
    Tuple5 tuple;
    ClassLabel label;
    bool verified = false;
};
// Classifies and re-verifies each sorted-tail solution.
std::vector<SolutionRecord> make_records(const SearchReport& report);

struct LcmSummary {
    std::size_t tuples = 0;    // sorted tails
    std::size_t expanded = 0;  // all orderings of the tails
    std::size_t family = 0;    // expanded counts by class
    std::size_t sporadic = 0;
    std::size_t unknown = 0;
};
std::map<std::int64_t, LcmSummary> summarize(const std::vector<SolutionRecord>& records);

// JSONL: a "run" record carrying the RunConfig, then one "solution" record per
// line in ascending tuple order. Numerators and denominators are decimal strings.
void emit_jsonl(std::ostream& out, const RunConfig& config, const std::vector<SolutionRecord>& records);
// TSV: header line, one row per lcm, and a final "total" row.
void emit_tsv(std::ostream& out, const std::map<std::int64_t, LcmSummary>& summary);

// Reads the solution records of a JSONL report; throws std::runtime_error on malformed lines.
std::vector<Tuple5> parse_jsonl(std::istream& in);

// Measurement records {E,a,b,c,lcm,lambda_class}, one per line.
void emit_measurements_jsonl(std::ostream& out, const RunConfig& config, const std::vector<Measurement>& ms);

std::string label_json(const ClassLabel& label);  // compact JSON object with the class fields

}  // namespace lhuilier
