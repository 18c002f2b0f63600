#include "lhuilier_tools/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "lhuilier/basis.hpp"
#include "lhuilier/closed_forms.hpp"
#include "lhuilier/families.hpp"
#include "lhuilier/solver.hpp"
#include "lhuilier/store.hpp"
#include "lhuilier/tan_repr.hpp"
#include "lhuilier/triangles.hpp"

namespace lhuilier::cli {

namespace {

// Raised for invalid argument values detected after parsing.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Tuple5 parse_tuple(const std::vector<std::string>& items, int sign) {
    if (items.size() != 5) throw UsageError("expected five angles, got " + std::to_string(items.size()));
    Tuple5 t;
    for (std::size_t i = 0; i < 5; ++i) {
        try {
            t.x[i] = parse_angle(items[i]);
        } catch (const std::invalid_argument&) {
            throw UsageError("bad angle: " + items[i]);
        }
    }
    t.sign = sign;
    return t;
}

RationalAngle parse_one(const std::string& s) {
    try {
        return parse_angle(s);
    } catch (const std::invalid_argument&) {
        throw UsageError("bad angle: " + s);
    }
}

int parse_sign(const std::string& s) {
    if (s == "+" || s == "+1" || s == "1") return 1;
    if (s == "-" || s == "-1") return -1;
    throw UsageError("sign must be + or -");
}

// Writes to the named file, or to fallback when the name is empty.
class Sink {
public:
    Sink(const std::string& path, std::ostream& fallback) : os_(&fallback) {
        if (!path.empty()) {
            file_ = std::make_unique<std::ofstream>(path);
            if (!*file_) throw std::runtime_error("cannot open " + path + " for writing");
            os_ = file_.get();
        }
    }
    std::ostream& get() { return *os_; }

private:
    std::unique_ptr<std::ofstream> file_;
    std::ostream* os_;
};

struct SearchArgs {
    std::int64_t max_lcm = 0;
    std::vector<std::int64_t> den_set;
    std::string sign = "+";
    bool six = false;
    std::string checkpoint;
    bool resume = false;
    unsigned jobs = 1;
    std::string out;
    std::string tsv;
};

int cmd_search(const SearchArgs& a, std::ostream& out, std::ostream& err) {
    if ((a.max_lcm > 0) == !a.den_set.empty()) throw UsageError("give exactly one of --max-lcm and --den-set");
    const auto spec = a.max_lcm > 0 ? DenominatorSpec::make_max_lcm(a.max_lcm) : DenominatorSpec::make_fixed(a.den_set);
    const int sign = parse_sign(a.sign);
    if (a.resume && a.checkpoint.empty()) throw UsageError("--resume requires --checkpoint");

    RunConfig cfg;
    cfg.subcommand = "search";
    cfg.spec = spec.str();
    cfg.sign = sign;
    cfg.six = a.six;
    cfg.jobs = a.jobs;
    cfg.output = a.out;
    cfg.checkpoint = a.checkpoint;
    cfg.precision_bits = default_precision_bits();

    if (a.six) {
        if (spec.kind != DenominatorSpec::Kind::FixedSet) throw UsageError("--six requires --den-set");
        auto sols = search_sixvar(spec);
        Sink sink(a.out, out);
        for (const auto& t : sols) {
            nlohmann::ordered_json j;
            j["record"] = "solution6";
            for (const auto& x : t.x) {
                j["nums"].push_back(std::to_string(x.num));
                j["dens"].push_back(std::to_string(x.den));
            }
            sink.get() << j.dump() << '\n';
        }
        err << "six-variable solutions: " << sols.size() << '\n';
        return kExitOk;
    }

    SearchOptions opts;
    opts.sign = sign;
    opts.jobs = a.jobs;
    if (!a.checkpoint.empty()) opts.checkpoint = a.checkpoint;
    opts.resume = a.resume;
    const auto report = search(spec, opts);
    const auto records = make_records(report);
    if (!a.out.empty()) {
        Sink sink(a.out, out);
        emit_jsonl(sink.get(), cfg, records);
    }
    {
        Sink sink(a.tsv, out);
        emit_tsv(sink.get(), summarize(records));
    }
    bool all_verified = true;
    for (const auto& r : records) all_verified = all_verified && r.verified;
    err << "levels " << report.levels_total << " (resumed " << report.levels_resumed << "), solutions "
        << report.solutions.size() << '\n';
    return all_verified ? kExitOk : kExitVerificationFailure;
}

int cmd_classify(const std::vector<std::string>& angles, std::ostream& out) {
    const Tuple5 t = parse_tuple(angles, 1);
    for (const auto& x : t.x)
        if (!in_open_quadrant(x)) throw UsageError("angles must lie in (0, pi/2): " + x.str());
    const bool ok = verify_solution(t);
    const auto label = classify(t);
    std::string kind = label.kind_str();
    kind[0] = static_cast<char>(std::toupper(kind[0]));
    out << kind << ' ' << label_json(label) << '\n';
    if (!ok) out << "not a solution\n";
    return ok ? kExitOk : kExitVerificationFailure;
}

int cmd_basis(std::int64_t n, std::ostream& out) {
    if (n < 2) throw UsageError("level must be at least 2");
    const auto& P = presentation(n);
    out << "rank " << P.rank() << '\n';
    for (const auto& b : P.basis()) out << b.str() << ' ' << b.residue().str() << '\n';
    return kExitOk;
}

int cmd_represent(std::int64_t n, std::int64_t a, std::ostream& out) {
    if (n < 2 || a % n == 0) throw UsageError("need level >= 2 and an index not divisible by the level");
    out << represent(n, a).str() << '\n';
    return kExitOk;
}

int cmd_tan_rep(const std::string& angle, std::int64_t level, std::ostream& out) {
    const auto x = parse_one(angle);
    if (!in_open_quadrant(x) || x.den <= 2) throw UsageError("angle must lie in (0, pi/2) with denominator > 2");
    const std::int64_t N = level > 0 ? level : x.den;
    if (N % x.den != 0) throw UsageError("the level must be a multiple of the denominator");
    for (const auto& f : tan_factors(x)) out << "v(" << f.level << "," << f.index << ")^" << f.exponent << ' ';
    out << '\n' << tan_vector(x, N).str() << '\n';
    return kExitOk;
}

int cmd_closed_form(std::int64_t n, std::int64_t a, std::ostream& out) {
    if (gcd64(a, n) != 1) throw UsageError("index must be coprime to the level");
    BasisVector v;
    if (is_squarefree_closed_form_level(n)) {
        const auto cf = closed_form(n, a);
        out << "case " << cf.case_label << '\n';
        for (const auto& g : cf.gammas) out << g.name << " sign " << g.sign << " size " << g.indices.size() << '\n';
        v = cf.vector;
    } else if (is_nonsquarefree_closed_form_level(n)) {
        v = nonsquarefree_closed_form(n, a);
    } else {
        throw UsageError("no closed form for level " + std::to_string(n));
    }
    const auto expected = represent(n, a).restrict_to_level(n);
    out << v.str() << '\n';
    const bool ok = v == expected;
    out << (ok ? "matches" : "differs from") << " the generic representation\n";
    return ok ? kExitOk : kExitVerificationFailure;
}

int cmd_triangles(std::int64_t max_lcm, std::int64_t prime, unsigned jobs, const std::string& path, std::ostream& out) {
    if ((max_lcm > 0) == (prime > 0)) throw UsageError("give exactly one of --max-lcm and --prime");
    if (prime > 0 && !is_prime(prime)) throw UsageError(std::to_string(prime) + " is not prime");
    RunConfig cfg;
    cfg.subcommand = "triangles";
    cfg.spec = max_lcm > 0 ? "max-lcm:" + std::to_string(max_lcm) : "prime:" + std::to_string(prime);
    cfg.precision_bits = default_precision_bits();
    const auto ms = max_lcm > 0 ? search_measurements(max_lcm, jobs) : prime_denominator_check(prime);
    Sink sink(path, out);
    emit_measurements_jsonl(sink.get(), cfg, ms);
    bool ok = true;
    for (const auto& m : ms) ok = ok && omega2_valid(m);
    return ok ? kExitOk : kExitVerificationFailure;
}

int cmd_lhuilier(const std::vector<std::string>& items, std::ostream& out) {
    if (items.size() != 4) throw UsageError("expected E a b c");
    const Measurement m{parse_one(items[0]), parse_one(items[1]), parse_one(items[2]), parse_one(items[3])};
    bool holds = false;
    try {
        holds = lhuilier_check(m);
    } catch (const std::domain_error& e) {
        out << "rejected: " << e.what() << '\n';
        return kExitVerificationFailure;
    }
    out << "lhuilier " << (holds ? "holds" : "fails") << '\n';
    const auto f = omega2_failure(m);
    out << "omega2 " << (f ? "invalid (" + *f + ")" : std::string("valid")) << '\n';
    out << "class " << lambda_class(m) << '\n';
    return holds ? kExitOk : kExitVerificationFailure;
}

int cmd_verify_sporadic(bool fix_search, std::ostream& out) {
    const auto report = verify_table(sporadic_table(), fix_search);
    bool resolved = true;
    for (const auto& rc : report.rows) {
        out << rc.row.index << '\t' << rc.row.heading << '\t' << rc.row.tuple.str() << '\t'
            << (rc.flagged() ? "FLAGGED: " + rc.reason : std::string("ok")) << '\n';
        for (const auto& c : rc.corrections) out << "\tcorrection\t" << c.str() << '\n';
        if (rc.flagged() && rc.corrections.size() != 1) resolved = false;
    }
    out << "rows " << report.rows.size() << ", flagged " << report.flagged_count() << '\n';
    return resolved ? kExitOk : kExitVerificationFailure;
}

int cmd_orbits(int row, std::ostream& out) {
    const auto& reps = sporadic_reps();
    if (row >= 0) {
        auto it = std::find_if(reps.begin(), reps.end(), [&](const SporadicRep& r) { return r.index == row; });
        if (it == reps.end()) throw UsageError("no sporadic row " + std::to_string(row));
        const auto orb = expand_orbits({*it});
        for (const auto& t : orb) out << t.str() << '\n';
        out << "orbit size " << orb.size() << '\n';
        return kExitOk;
    }
    const auto all = expand_orbits(reps);
    out << "rows " << reps.size() << ", expanded " << all.size() << '\n';
    return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact solver for the generalized L'Huilier equation", "lhuilier"};
    app.require_subcommand(1);
    long precision = 0;
    app.add_option("--precision-bits", precision, "Working precision of numeric checks (>= 64)")
        ->check(CLI::Range(64L, 1L << 20));

    SearchArgs sa;
    auto* search_cmd = app.add_subcommand("search", "Exhaustive search of tan^2 x0 = tan x1 tan x2 tan x3 tan x4");
    search_cmd->add_option("--max-lcm", sa.max_lcm, "All tuples with lcm <= D")->check(CLI::PositiveNumber);
    search_cmd->add_option("--den-set", sa.den_set, "Denominators allowed for every entry")->delimiter(',');
    search_cmd->add_option("--sign", sa.sign, "+ for the equation, - for the twisted equation");
    search_cmd->add_flag("--six", sa.six, "Six-variable equation over --den-set");
    search_cmd->add_option("--checkpoint", sa.checkpoint, "JSONL checkpoint file");
    search_cmd->add_flag("--resume", sa.resume, "Resume from --checkpoint");
    search_cmd->add_option("--jobs", sa.jobs, "Worker threads")->check(CLI::Range(1U, 1024U));
    search_cmd->add_option("--out", sa.out, "JSONL report path");
    search_cmd->add_option("--tsv", sa.tsv, "TSV summary path (default: stdout)");

    std::vector<std::string> classify_args;
    auto* classify_cmd = app.add_subcommand("classify", "Classify a solution as family, sporadic or unknown");
    classify_cmd->add_option("angles", classify_args, "x0 x1 x2 x3 x4 as p/q")->required()->expected(5);

    std::int64_t basis_n = 0;
    auto* basis_cmd = app.add_subcommand("basis", "Conrad basis of X^n");
    basis_cmd->add_option("n", basis_n)->required();

    std::int64_t rep_n = 0, rep_a = 0;
    auto* represent_cmd = app.add_subcommand("represent", "Coordinates of v(n,a)");
    represent_cmd->add_option("n", rep_n)->required();
    represent_cmd->add_option("a", rep_a)->required();

    std::string tan_angle;
    std::int64_t tan_level = 0;
    auto* tan_cmd = app.add_subcommand("tan-rep", "tan(x) in the basis");
    tan_cmd->add_option("x", tan_angle, "angle p/q in units of pi")->required();
    tan_cmd->add_option("--level", tan_level, "Working level (default: den(x))");

    std::int64_t cf_n = 0, cf_a = 0;
    auto* cf_cmd = app.add_subcommand("closed-form", "Closed-form relative coordinates of v(n,a)");
    cf_cmd->add_option("n", cf_n)->required();
    cf_cmd->add_option("a", cf_a)->required();

    std::int64_t tri_lcm = 0, tri_prime = 0;
    unsigned tri_jobs = 1;
    std::string tri_out;
    auto* tri_cmd = app.add_subcommand("triangles", "Rational spherical triangle measurements");
    tri_cmd->add_option("--max-lcm", tri_lcm)->check(CLI::PositiveNumber);
    tri_cmd->add_option("--prime", tri_prime)->check(CLI::PositiveNumber);
    tri_cmd->add_option("--jobs", tri_jobs)->check(CLI::Range(1U, 1024U));
    tri_cmd->add_option("--out", tri_out, "JSONL path (default: stdout)");

    std::vector<std::string> lh_args;
    auto* lh_cmd = app.add_subcommand("lhuilier", "Check L'Huilier's relation for a measurement");
    lh_cmd->add_option("measurement", lh_args, "E a b c as p/q")->required()->expected(4);

    bool fix_search = false;
    auto* vs_cmd = app.add_subcommand("verify-sporadic", "Verify the sporadic table");
    vs_cmd->add_flag("--fix-search", fix_search, "Search corrections for flagged rows");

    int orbit_row = -1;
    auto* orbits_cmd = app.add_subcommand("orbits", "Orbit expansion of the sporadic table");
    orbits_cmd->add_option("--row", orbit_row, "Row index (0-based)")->check(CLI::NonNegativeNumber);

    std::vector<std::string> argv_store{"lhuilier"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const auto& s : argv_store) argv.push_back(s.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }
    if (precision > 0) setenv("LHUILIER_PRECISION_BITS", std::to_string(precision).c_str(), 1);

    try {
        if (*search_cmd) return cmd_search(sa, out, err);
        if (*classify_cmd) return cmd_classify(classify_args, out);
        if (*basis_cmd) return cmd_basis(basis_n, out);
        if (*represent_cmd) return cmd_represent(rep_n, rep_a, out);
        if (*tan_cmd) return cmd_tan_rep(tan_angle, tan_level, out);
        if (*cf_cmd) return cmd_closed_form(cf_n, cf_a, out);
        if (*tri_cmd) return cmd_triangles(tri_lcm, tri_prime, tri_jobs, tri_out, out);
        if (*lh_cmd) return cmd_lhuilier(lh_args, out);
        if (*vs_cmd) return cmd_verify_sporadic(fix_search, out);
        if (*orbits_cmd) return cmd_orbits(orbit_row, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "failure: " << e.what() << '\n';
        return kExitVerificationFailure;
    }
    return kExitUsage;
}

}  // namespace lhuilier::cli
