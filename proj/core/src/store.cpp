#include "lhuilier/store.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <set>
#include <stdexcept>

#include <json.hpp>

namespace lhuilier {

namespace {

using Json = nlohmann::ordered_json;

Json label_object(const ClassLabel& label) {
    Json j;
    j["class"] = label.kind_str();
    if (label.family) {
        j["family_id"] = std::to_string(label.family->id.i) + "," + std::to_string(label.family->id.j);
        j["s"] = label.family->s.str();
        j["t"] = label.family->t ? Json(label.family->t->str()) : Json(nullptr);
        j["perm"] = perm_str(label.family->perm);
    } else {
        j["family_id"] = nullptr;
        j["s"] = nullptr;
        j["t"] = nullptr;
        j["perm"] = nullptr;
    }
    if (label.kind == ClassLabel::Kind::Sporadic) {
        j["row"] = label.row;
        j["group_elem"] = std::string(label.group_elem.theta ? "theta*" : "") + perm_str(label.group_elem.perm);
        if (label.corrected_row) j["corrected_row"] = true;
    } else {
        j["row"] = nullptr;
        j["group_elem"] = nullptr;
    }
    if (label.also_sporadic) j["also_sporadic"] = true;
    return j;
}

Json config_object(const RunConfig& c) {
    Json j;
    j["record"] = "run";
    j["subcommand"] = c.subcommand;
    if (!c.spec.empty()) j["spec"] = c.spec;
    j["sign"] = c.sign;
    if (c.six) j["six"] = true;
    if (!c.output.empty()) j["output"] = c.output;
    if (!c.checkpoint.empty()) j["checkpoint"] = c.checkpoint;
    j["precision_bits"] = c.precision_bits;
    return j;
}

}  // namespace

std::size_t tail_arrangements(const Tuple5& t) {
    std::set<std::array<RationalAngle, 4>> seen;
    for (const auto& p : all_perms()) {
        auto r = s4_act(p, t);
        seen.insert({r.x[1], r.x[2], r.x[3], r.x[4]});
    }
    return seen.size();
}

std::vector<SolutionRecord> make_records(const SearchReport& report) {
    std::vector<SolutionRecord> out;
    out.reserve(report.solutions.size());
    for (const auto& t : report.solutions) {
        SolutionRecord r;
        r.tuple = t;
        r.label = classify(t);
        r.verified = verify_solution(t);
        out.push_back(std::move(r));
    }
    return out;
}

std::map<std::int64_t, LcmSummary> summarize(const std::vector<SolutionRecord>& records) {
    std::map<std::int64_t, LcmSummary> out;
    for (const auto& r : records) {
        auto& s = out[tuple_lcm(r.tuple)];
        const auto n = tail_arrangements(r.tuple);
        ++s.tuples;
        s.expanded += n;
        switch (r.label.kind) {
            case ClassLabel::Kind::Family: s.family += n; break;
            case ClassLabel::Kind::Sporadic: s.sporadic += n; break;
            case ClassLabel::Kind::Unknown: s.unknown += n; break;
        }
    }
    return out;
}

void emit_jsonl(std::ostream& out, const RunConfig& config, const std::vector<SolutionRecord>& records) {
    out << config_object(config).dump() << '\n';
    for (const auto& r : records) {
        Json j;
        j["record"] = "solution";
        Json nums = Json::array(), dens = Json::array();
        for (const auto& x : r.tuple.x) {
            nums.push_back(std::to_string(x.num));
            dens.push_back(std::to_string(x.den));
        }
        j["nums"] = nums;
        j["dens"] = dens;
        j["lcm"] = std::to_string(tuple_lcm(r.tuple));
        j["sign"] = r.tuple.sign;
        const Json label = label_object(r.label);
        for (const auto& [k, v] : label.items()) j[k] = v;
        j["verified"] = r.verified;
        out << j.dump() << '\n';
    }
    if (!out) throw std::runtime_error("emit_jsonl: write failed");
}

void emit_tsv(std::ostream& out, const std::map<std::int64_t, LcmSummary>& summary) {
    out << "lcm\ttuples\texpanded\tfamily\tsporadic\tunknown\n";
    LcmSummary total;
    for (const auto& [lcm, s] : summary) {
        out << lcm << '\t' << s.tuples << '\t' << s.expanded << '\t' << s.family << '\t' << s.sporadic << '\t'
            << s.unknown << '\n';
        total.tuples += s.tuples;
        total.expanded += s.expanded;
        total.family += s.family;
        total.sporadic += s.sporadic;
        total.unknown += s.unknown;
    }
    out << "total\t" << total.tuples << '\t' << total.expanded << '\t' << total.family << '\t' << total.sporadic
        << '\t' << total.unknown << '\n';
    if (!out) throw std::runtime_error("emit_tsv: write failed");
}

std::vector<Tuple5> parse_jsonl(std::istream& in) {
    std::vector<Tuple5> out;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        try {
            auto j = Json::parse(line);
            if (j.at("record").get<std::string>() != "solution") continue;
            const auto& nums = j.at("nums");
            const auto& dens = j.at("dens");
            if (nums.size() != 5 || dens.size() != 5) throw std::runtime_error("expected five entries");
            Tuple5 t;
            for (std::size_t i = 0; i < 5; ++i)
                t.x[i] = Rational::make(std::stoll(nums[i].get<std::string>()), std::stoll(dens[i].get<std::string>()));
            t.sign = j.at("sign").get<int>();
            out.push_back(t);
        } catch (const std::exception& e) {
            throw std::runtime_error("parse_jsonl: line " + std::to_string(lineno) + ": " + e.what());
        }
    }
    return out;
}

void emit_measurements_jsonl(std::ostream& out, const RunConfig& config, const std::vector<Measurement>& ms) {
    out << config_object(config).dump() << '\n';
    for (const auto& m : ms) {
        Json j;
        j["record"] = "measurement";
        j["E"] = m.E.str();
        j["a"] = m.a.str();
        j["b"] = m.b.str();
        j["c"] = m.c.str();
        j["lcm"] = std::to_string(measurement_lcm(m));
        j["lambda_class"] = lambda_class(m);
        out << j.dump() << '\n';
    }
    if (!out) throw std::runtime_error("emit_measurements_jsonl: write failed");
}

std::string label_json(const ClassLabel& label) { return label_object(label).dump(); }

}  // namespace lhuilier
