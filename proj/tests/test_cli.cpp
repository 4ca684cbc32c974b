#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cli/commands.hpp"

#include <hypfib/errors.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

using namespace hypfib;
using namespace hypfib::cli;

namespace {

std::filesystem::path temp_path(std::string_view name)
{
    return std::filesystem::temp_directory_path() / ("hypfib_test_" + std::string(name));
}

int run(std::vector<std::string> args)
{
    args.insert(args.begin(), "hypfib");
    std::vector<char*> argv;
    for (auto& a : args)
        argv.push_back(a.data());
    return run_cli(static_cast<int>(argv.size()), argv.data());
}

std::string slurp(const std::filesystem::path& p)
{
    std::ifstream in(p, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

RunConfig config(Command c)
{
    RunConfig cfg;
    cfg.command = c;
    return cfg;
}

} // namespace

TEST_CASE("range parsing")
{
    CHECK(parse_range("1..5").lo == 1);
    CHECK(parse_range("1..5").hi == 5);
    CHECK(parse_range("-3..0").lo == -3);
    CHECK(parse_range("7").hi == 7);
    CHECK_THROWS_AS(parse_range("5..1"), InvalidRange);
    CHECK_THROWS_AS(parse_range("a..b"), InvalidRange);
    CHECK_THROWS_AS(parse_range("1..."), InvalidRange);
}

TEST_CASE("list parsing")
{
    CHECK(parse_k_list("symbolic,1,7/2").size() == 3);
    CHECK_THROWS_AS(parse_k_list("1,,2"), InvalidRange);
    CHECK(parse_identity_list("all").size() == 15);
    CHECK(parse_identity_list("cassini,18").size() == 2);
    CHECK_THROWS_AS(parse_identity_list("cassini,foo"), InvalidRange);
}

TEST_CASE("csv quoting")
{
    CHECK(csv_field("plain") == "plain");
    CHECK(csv_field("a,b") == "\"a,b\"");
    CHECK(csv_field("say \"hi\"") == "\"say \"\"hi\"\"\"");
    CHECK(csv_field("two\nlines") == "\"two\nlines\"");
}

TEST_CASE("gen")
{
    auto cfg = config(Command::gen);
    cfg.n = IndexRange{0, 5};
    auto r = cmd_gen(cfg);
    std::vector<std::string> f;
    for (const auto& row : r.rows)
        f.push_back(row.fib);
    CHECK(f == std::vector<std::string>{"0", "1", "k", "k^2 + 1", "k^3 + 2k", "k^4 + 3k^2 + 1"});

    cfg.k_modes = {KMode::numeric(1)};
    cfg.n = IndexRange{0, 10};
    f.clear();
    for (const auto& row : cmd_gen(cfg).rows)
        f.push_back(row.fib);
    CHECK(f == std::vector<std::string>{"0", "1", "1", "2", "3", "5", "8", "13", "21", "34", "55"});

    cfg.k_modes = {};
    cfg.n = IndexRange{-3, 0};
    auto neg = cmd_gen(cfg);
    REQUIRE(neg.rows.size() == 4);
    CHECK(neg.rows[1].n == -2);
    CHECK(neg.rows[1].fib == "-k");

    cfg.n = IndexRange{0, 41};
    CHECK_THROWS_AS(cmd_gen(cfg), GridTooLarge);
}

TEST_CASE("verify report structure")
{
    auto cfg = config(Command::verify);
    cfg.k_modes = {KMode::numeric(1)};
    cfg.n = IndexRange{1, 8};
    auto r = cmd_verify(cfg);
    CHECK(exit_status(r) == exit_ok);
    CHECK_FALSE(r.errata.empty());

    Summary tally;
    std::set<std::pair<std::string, std::string>> mismatching;
    for (const auto& rec : r.records) {
        ++tally.records;
        for (const auto& c : rec.candidates) {
            ++tally.candidates;
            (c.verdict == "EXACT" ? tally.exact : tally.mismatch)++;
            if (c.asserted) {
                ++tally.asserted;
                tally.asserted_mismatch += c.verdict != "EXACT";
            }
            if (c.verdict != "EXACT")
                mismatching.emplace(rec.id, c.label);
        }
    }
    CHECK(tally == r.summary);
    std::set<std::pair<std::string, std::string>> errata;
    for (const auto& e : r.errata)
        errata.emplace(e.id, e.candidate);
    CHECK(errata == mismatching);

    SUBCASE("recurrence alone has no errata")
    {
        auto c2 = config(Command::verify);
        c2.k_modes = {KMode::symbolic()};
        c2.identities = {IdentityId::recurrence};
        c2.n = IndexRange{0, 20};
        auto rr = cmd_verify(c2);
        CHECK(rr.errata.empty());
        CHECK(rr.records.size() == 21);
        CHECK(exit_status(rr) == exit_ok);
    }

    SUBCASE("csv has one row per candidate")
    {
        auto csv = to_csv(r);
        std::size_t lines = 0;
        for (std::size_t pos = 0; (pos = csv.find("\r\n", pos)) != std::string::npos; pos += 2)
            ++lines;
        CHECK(lines == r.summary.candidates + 1);
        CHECK(csv.rfind("id,params,candidate,verdict,residual\r\n", 0) == 0);
    }

    SUBCASE("json round-trip is byte-identical")
    {
        auto json = to_json(r);
        CHECK(to_json(report_from_json(json)) == json);
        CHECK(report_from_json(json) == r);
        CHECK_THROWS_AS(report_from_json(json.substr(0, json.size() / 2)), MalformedReport);
        CHECK_THROWS_AS(report_from_json("{}"), MalformedReport);
    }
}

TEST_CASE("expectation table")
{
    auto t = ExpectationTable::builtin();
    std::set<std::pair<std::string, std::string>> expect{
        {"RECURRENCE", "rhs"}, {"SQUARE", "rhs"},  {"LUCAS_SUM", "rhs"}, {"LUCAS_DIFF", "rhs"}, {"CONJ_SUM", "rhs"},
        {"SUM_ALL", "rhs"},    {"SUM_ODD", "rhs"}, {"SUM_EVEN", "rhs"},  {"BINET", "proof"},
    };
    CHECK(t.entries() == expect);
    CHECK_THROWS_AS(ExpectationTable::from_json("{\"asserted\": 3}"), MalformedReport);
}

TEST_CASE("bench")
{
    auto cfg = config(Command::bench);
    cfg.k_modes = {KMode::numeric(2)};
    cfg.n = IndexRange{1000, 1000};
    auto r = cmd_bench(cfg);
    REQUIRE(r.bench.size() == 1);
    CHECK(r.bench[0].equal);
    CHECK(r.bench[0].doubling_big_mults <= r.bench[0].doubling_bound);

    cfg.n = IndexRange{0, 0};
    auto zero = cmd_bench(cfg);
    REQUIRE(zero.bench.size() == 1);
    CHECK(zero.bench[0].equal);

    cfg.k_modes = {KMode::numeric(1)};
    cfg.n = IndexRange{10000, 10000};
    auto r4 = cmd_bench(cfg);
    CHECK(r4.bench[0].doubling_big_mults <= 2 * 14 + 2);

    CHECK(bench_sizes({1000, 1000000}) == std::vector<std::uint64_t>{1000, 10000, 100000, 1000000});

    cfg.k_modes = {KMode::symbolic()};
    CHECK_THROWS_AS(cmd_bench(cfg), SymbolicKUnsupported);
}

TEST_CASE("exit codes")
{
    auto out = temp_path("out.json").string();
    CHECK(run({"verify", "--k", "1", "--n", "1..4", "--out", out}) == exit_ok);
    CHECK(run({"report", out, "--format", "csv", "--out", temp_path("out.csv").string()}) == exit_ok);
    CHECK(run({"report", out, "--out", temp_path("again.json").string()}) == exit_ok);
    CHECK(slurp(out) == slurp(temp_path("again.json")));

    // promoting a report-only mismatch to asserted makes verify fail
    auto table = temp_path("expect.json");
    std::ofstream(table) << R"({"schema_version": 1, "asserted": {"DOCAGNE": ["statement"]}})";
    CHECK(run({"verify", "--k", "1", "--n", "1..4", "--expect", table.string(), "--out", out}) == exit_mismatch);
    CHECK(run({"verify", "--k", "1", "--n", "1..4", "--format", "csv", "--expect", table.string(), "--out", out}) ==
          exit_mismatch);

    CHECK(run({"verify", "--jobs", "0", "--out", out}) == exit_usage);
    CHECK(run({"verify", "--n", "5..1", "--out", out}) == exit_usage);
    CHECK(run({"verify", "--n", "1..40", "--out", out}) == exit_usage);
    CHECK(run({"verify", "--format", "xml", "--out", out}) == exit_usage);
    CHECK(run({"bench", "--k", "symbolic", "--out", out}) == exit_usage);
    CHECK(run({"frobnicate"}) == exit_usage);
    CHECK(run({}) == exit_usage);

    auto truncated = temp_path("truncated.json");
    auto text = slurp(temp_path("again.json"));
    std::ofstream(truncated, std::ios::binary) << text.substr(0, text.size() / 3);
    CHECK(run({"report", truncated.string(), "--out", out}) == exit_usage);
    CHECK(run({"report", temp_path("missing.json").string()}) == exit_usage);
}
