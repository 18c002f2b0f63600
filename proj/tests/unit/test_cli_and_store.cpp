#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "lhuilier/store.hpp"
#include "lhuilier_tools/cli.hpp"

using namespace lhuilier;

namespace {

struct Result {
    int code = 0;
    std::string out;
    std::string err;
};

Result run_cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

std::string last_line(const std::string& text) {
    auto end = text.find_last_not_of('\n');
    auto start = text.rfind('\n', end);
    return text.substr(start == std::string::npos ? 0 : start + 1, end - (start == std::string::npos ? 0 : start + 1) + 1);
}

}  // namespace

TEST_SUITE("cli_and_store") {
    TEST_CASE("empty TSV report still has its header") {
        std::ostringstream out;
        emit_tsv(out, {});
        CHECK(out.str() == "lcm\ttuples\texpanded\tfamily\tsporadic\tunknown\ntotal\t0\t0\t0\t0\t0\n");
    }

    TEST_CASE("tail arrangements count distinct orderings") {
        Tuple5 t;
        t.x = {parse_angle("1/4"), parse_angle("1/4"), parse_angle("1/4"), parse_angle("1/4"), parse_angle("1/4")};
        CHECK(tail_arrangements(t) == 1);
        t.x = {parse_angle("1/7"), parse_angle("1/7"), parse_angle("1/7"), parse_angle("1/5"), parse_angle("3/10")};
        CHECK(tail_arrangements(t) == 12);
        t.x = {parse_angle("1/8"), parse_angle("1/40"), parse_angle("7/40"), parse_angle("9/40"), parse_angle("17/40")};
        CHECK(tail_arrangements(t) == 24);
    }

    TEST_CASE("JSONL round trip reproduces the tuples") {
        const auto report = search(DenominatorSpec::make_max_lcm(30));
        const auto records = make_records(report);
        RunConfig cfg;
        cfg.subcommand = "search";
        cfg.spec = report.spec.str();
        std::stringstream buf;
        emit_jsonl(buf, cfg, records);
        CHECK(parse_jsonl(buf) == report.solutions);
        for (const auto& r : records) CHECK(r.verified);

        std::istringstream bad("{\"record\":\"solution\",\"nums\":[\"1\"],\"dens\":[\"4\"],\"sign\":1}\n");
        CHECK_THROWS_AS(parse_jsonl(bad), std::runtime_error);
    }

    TEST_CASE("usage errors exit with 2") {
        CHECK(run_cli({"search", "--bogus"}).code == cli::kExitUsage);
        CHECK(run_cli({"search"}).code == cli::kExitUsage);
        CHECK(run_cli({"search", "--max-lcm", "10", "--den-set", "5,10"}).code == cli::kExitUsage);
        CHECK(run_cli({"classify", "1/8", "1/40"}).code == cli::kExitUsage);
        CHECK(run_cli({"nosuchcommand"}).code == cli::kExitUsage);
        CHECK(run_cli({"--help"}).code == cli::kExitOk);
    }

    TEST_CASE("classify prints the sporadic label") {
        const auto r = run_cli({"classify", "1/8", "1/40", "7/40", "9/40", "17/40"});
        CHECK(r.code == cli::kExitOk);
        CHECK(r.out.rfind("Sporadic {", 0) == 0);
        CHECK(r.out.find("\"class\":\"sporadic\"") != std::string::npos);
        const auto f = run_cli({"classify", "1/7", "1/7", "1/7", "1/5", "3/10"});
        CHECK(f.out.rfind("Family {", 0) == 0);
        CHECK(run_cli({"classify", "1/5", "1/5", "1/5", "1/5", "1/5"}).code == cli::kExitVerificationFailure);
    }

    TEST_CASE("search --max-lcm 40 reports the lcm 30 and 40 orbits") {
        const auto r = run_cli({"search", "--max-lcm", "40"});
        REQUIRE(r.code == cli::kExitOk);
        // 48 x (4 rows at lcm 30 + 1 row at lcm 40), none of them unknown.
        CHECK(last_line(r.out) == "total\t1313\t16315\t16075\t240\t0");
    }

    TEST_CASE("other subcommands") {
        CHECK(run_cli({"basis", "12"}).out.rfind("rank 3\n", 0) == 0);
        CHECK(run_cli({"represent", "5", "1"}).code == cli::kExitOk);
        CHECK(run_cli({"tan-rep", "1/5"}).out.find("5:1^2 5:2^-1") != std::string::npos);
        CHECK(run_cli({"closed-form", "60", "7"}).code == cli::kExitOk);
        const auto lh = run_cli({"lhuilier", "1/2", "2/5", "1/2", "4/5"});
        CHECK(lh.out.find("class Lambda2") != std::string::npos);
        CHECK(run_cli({"orbits", "--row", "0"}).out.find("orbit size 48") != std::string::npos);
        const auto tri = run_cli({"triangles", "--prime", "2"});
        CHECK(tri.out.find("{\"record\":\"measurement\",\"E\":\"1/2\",\"a\":\"1/2\",\"b\":\"1/2\",\"c\":\"1/2\"") !=
              std::string::npos);
    }

    TEST_CASE("JSONL output is byte-identical across job counts") {
        const auto dir = std::filesystem::temp_directory_path() / "lhuilier_cli_test";
        std::filesystem::create_directories(dir);
        const auto path = (dir / "report.jsonl").string();
        REQUIRE(run_cli({"search", "--max-lcm", "40", "--jobs", "1", "--out", path}).code == cli::kExitOk);
        const auto one = slurp(path);
        REQUIRE(run_cli({"search", "--max-lcm", "40", "--jobs", "3", "--out", path}).code == cli::kExitOk);
        const auto three = slurp(path);
        CHECK(one == three);
        CHECK(one.rfind("{\"record\":\"run\"", 0) == 0);
        std::istringstream in(one);
        const auto tuples = parse_jsonl(in);
        CHECK(tuples.size() == 1313);
        std::filesystem::remove_all(dir);
    }
}
