#include "commands.hpp"

#include <hypfib/errors.hpp>
#include <hypfib/hquat.hpp>

#include <CLI11.hpp>
#include <fmt/format.h>

#include <algorithm>
#include <bit>
#include <charconv>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

namespace hypfib::cli {

namespace {

std::int64_t parse_int(std::string_view text)
{
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc() || ptr != text.data() + text.size())
        throw InvalidRange(fmt::format("not an integer: '{}'", text));
    return v;
}

std::vector<std::string_view> split(std::string_view text, char sep)
{
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        auto pos = text.find(sep, start);
        out.push_back(text.substr(start, pos - start));
        if (pos == std::string_view::npos)
            break;
        start = pos + 1;
    }
    return out;
}

std::int64_t max_abs(const IndexRange& r) { return std::max(std::llabs(r.lo), std::llabs(r.hi)); }

ConfigEcho echo(const RunConfig& c)
{
    ConfigEcho e;
    for (const auto& k : c.k_modes)
        e.k.push_back(k.label());
    e.n = {c.n->lo, c.n->hi};
    e.m = {c.m.lo, c.m.hi};
    e.r = {c.r.lo, c.r.hi};
    if (c.command == Command::verify)
        for (auto id : c.identities)
            e.identities.emplace_back(identity_name(id));
    return e;
}

std::string_view command_name(Command c)
{
    switch (c) {
    case Command::gen: return "gen";
    case Command::verify: return "verify";
    case Command::bench: return "bench";
    case Command::report: return "report";
    }
    return "?";
}

Report new_report(const RunConfig& config)
{
    Report r;
    r.tool_version = std::string(tool_version());
    r.command = std::string(command_name(config.command));
    r.config = echo(config);
    return r;
}

} // namespace

IndexRange parse_range(std::string_view text)
{
    auto dots = text.find("..");
    if (dots == std::string_view::npos) {
        auto v = parse_int(text);
        return {v, v};
    }
    IndexRange r{parse_int(text.substr(0, dots)), parse_int(text.substr(dots + 2))};
    if (r.lo > r.hi)
        throw InvalidRange(fmt::format("range '{}' has lo > hi", text));
    return r;
}

std::vector<KMode> parse_k_list(std::string_view text)
{
    std::vector<KMode> out;
    for (auto part : split(text, ',')) {
        try {
            out.push_back(KMode::parse(part));
        } catch (const ParseError& e) {
            throw InvalidRange(fmt::format("bad --k value '{}': {}", part, e.what()));
        }
    }
    return out;
}

std::vector<IdentityId> parse_identity_list(std::string_view text)
{
    std::vector<IdentityId> out;
    for (auto part : split(text, ',')) {
        if (part == "all" || part == "ALL") {
            const auto& all = all_identities();
            out.insert(out.end(), all.begin(), all.end());
            continue;
        }
        auto id = parse_identity(part);
        if (!id)
            throw InvalidRange(fmt::format("unknown identity '{}'", part));
        out.push_back(*id);
    }
    return out;
}

IndexRange default_n(Command command)
{
    switch (command) {
    case Command::gen: return {0, 10};
    case Command::bench: return {1000, 1000000};
    default: return SuiteGrid{}.n;
    }
}

std::vector<std::uint64_t> bench_sizes(const IndexRange& n)
{
    std::vector<std::uint64_t> out{static_cast<std::uint64_t>(n.lo)};
    std::uint64_t x = n.lo == 0 ? 1 : static_cast<std::uint64_t>(n.lo) * 10;
    for (; x <= static_cast<std::uint64_t>(n.hi); x *= 10)
        out.push_back(x);
    return out;
}

RunConfig resolve(RunConfig c)
{
    if (c.k_modes.empty()) {
        switch (c.command) {
        case Command::gen: c.k_modes = {KMode::symbolic()}; break;
        case Command::bench: c.k_modes = {KMode::numeric(1)}; break;
        default:
            c.k_modes = {KMode::symbolic(), KMode::numeric(1), KMode::numeric(2), KMode::numeric(3)};
            break;
        }
    }
    if (!c.n)
        c.n = default_n(c.command);
    if (c.identities.empty()) {
        const auto& all = all_identities();
        c.identities.assign(all.begin(), all.end());
    }
    std::sort(c.identities.begin(), c.identities.end());
    c.identities.erase(std::unique(c.identities.begin(), c.identities.end()), c.identities.end());

    for (const auto* r : {&*c.n, &c.m, &c.r})
        if (r->lo > r->hi)
            throw InvalidRange(fmt::format("range {}..{} has lo > hi", r->lo, r->hi));
    if (c.jobs == 0)
        throw InvalidRange("--jobs must be at least 1");

    const bool symbolic =
        std::any_of(c.k_modes.begin(), c.k_modes.end(), [](const KMode& k) { return k.is_symbolic(); });
    if (c.command == Command::bench) {
        if (symbolic)
            throw SymbolicKUnsupported("bench needs a numeric --k");
        if (c.n->lo < 0)
            throw InvalidRange("bench sizes must be non-negative");
    }
    if (symbolic && (c.command == Command::gen || c.command == Command::verify)) {
        std::int64_t second = 0;
        if (c.command == Command::verify) {
            for (auto id : c.identities) {
                if (uses_m(id))
                    second = std::max(second, max_abs(c.m));
                if (uses_r(id))
                    second = std::max(second, max_abs(c.r));
            }
        }
        const auto reach = max_abs(*c.n) + second;
        if (reach > symbolic_degree_cap)
            throw GridTooLarge(fmt::format("symbolic grid reaches n+m = {} (cap {})", reach, symbolic_degree_cap));
    }
    return c;
}

Report cmd_gen(const RunConfig& raw)
{
    auto config = resolve(raw);
    auto report = new_report(config);
    for (const auto& mode : config.k_modes) {
        SeqCache cache(mode);
        for (auto n = config.n->lo; n <= config.n->hi; ++n) {
            report.rows.push_back({mode.label(), n, cache.fib(n).to_string(), cache.lucas(n).to_string(),
                                   hfib(cache, n).to_string(), hlucas(cache, n).to_string()});
        }
    }
    return report;
}

Report cmd_verify(const RunConfig& raw)
{
    auto config = resolve(raw);
    auto report = new_report(config);
    const auto expect =
        config.expectations ? ExpectationTable::from_file(*config.expectations) : ExpectationTable::builtin();
    SuiteGrid grid{*config.n, config.m, config.r};
    auto records = run_suite(config.identities, grid, config.k_modes, config.jobs);
    fill_verification(report, records, expect);
    return report;
}

Report cmd_bench(const RunConfig& raw)
{
    auto config = resolve(raw);
    auto report = new_report(config);
    using clock = std::chrono::steady_clock;
    auto ms = [](clock::duration d) { return std::chrono::duration<double, std::milli>(d).count(); };

    for (const auto& mode : config.k_modes) {
        for (auto n : bench_sizes(*config.n)) {
            BenchRow row;
            row.k = mode.label();
            row.n = n;
            KernelStats it_stats, db_stats;

            auto t0 = clock::now();
            auto iterative = fib_pair_iterative(mode, n, &it_stats);
            auto t1 = clock::now();
            auto doubling = fib_pair_doubling(mode, n, &db_stats);
            auto t2 = clock::now();

            row.equal = iterative == doubling;
            row.iterative_ms = ms(t1 - t0);
            row.doubling_ms = ms(t2 - t1);
            row.iterative_mults = it_stats.scalar_mults;
            row.doubling_big_mults = db_stats.big_mults;
            row.doubling_bound = n <= 1 ? 2 : 2 * static_cast<std::size_t>(std::bit_width(n - 1)) + 2;
            report.bench.push_back(row);
        }
    }
    return report;
}

Report cmd_report(const RunConfig& config)
{
    std::ifstream in(config.input, std::ios::binary);
    if (!in)
        throw MalformedReport(fmt::format("cannot read report '{}'", config.input));
    std::stringstream ss;
    ss << in.rdbuf();
    return report_from_json(ss.str());
}

int exit_status(const Report& report)
{
    if (report.command == "verify" && report.summary.asserted_mismatch > 0)
        return exit_mismatch;
    if (report.command == "bench" &&
        std::any_of(report.bench.begin(), report.bench.end(), [](const BenchRow& b) { return !b.equal; }))
        return exit_mismatch;
    return exit_ok;
}

int run_cli(int argc, char** argv)
{
    CLI::App app{"Exact hyperbolic k-Fibonacci quaternion toolkit"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(tool_version()));

    RunConfig config;
    std::string k_text, n_text, m_text, r_text, id_text, format_text = "json";
    std::optional<std::string> expect_path;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--k", k_text, "k mode(s): symbolic, an integer or a rational, comma separated");
        sub->add_option("--n", n_text, "n range a..b");
        sub->add_option("--format", format_text, "json|csv|text")->check(CLI::IsMember({"json", "csv", "text"}));
        sub->add_option("--out", config.output, "output file (default: stdout)");
    };

    auto* gen = app.add_subcommand("gen", "tabulate F, L, HF and HL");
    add_common(gen);

    auto* verify = app.add_subcommand("verify", "verify the identity suite over a parameter grid");
    add_common(verify);
    verify->add_option("--m", m_text, "m range a..b");
    verify->add_option("--r", r_text, "r range a..b");
    verify->add_option("--identity", id_text, "identity id(s) or 'all', comma separated");
    verify->add_option("--jobs", config.jobs, "worker threads");
    verify->add_option("--expect", expect_path, "expectation table JSON (default: built in)");

    auto* bench = app.add_subcommand("bench", "compare iterative and fast-doubling kernels");
    add_common(bench);

    auto* report = app.add_subcommand("report", "re-render a JSON report");
    report->add_option("input", config.input, "JSON report")->required();
    report->add_option("--format", format_text, "json|csv|text")->check(CLI::IsMember({"json", "csv", "text"}));
    report->add_option("--out", config.output, "output file (default: stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        if (gen->parsed())
            config.command = Command::gen;
        else if (verify->parsed())
            config.command = Command::verify;
        else if (bench->parsed())
            config.command = Command::bench;
        else
            config.command = Command::report;

        if (!k_text.empty())
            config.k_modes = parse_k_list(k_text);
        if (!n_text.empty())
            config.n = parse_range(n_text);
        if (!m_text.empty())
            config.m = parse_range(m_text);
        if (!r_text.empty())
            config.r = parse_range(r_text);
        if (!id_text.empty())
            config.identities = parse_identity_list(id_text);
        config.format = parse_format(format_text);
        config.expectations = expect_path;

        Report result;
        switch (config.command) {
        case Command::gen: result = cmd_gen(config); break;
        case Command::verify: result = cmd_verify(config); break;
        case Command::bench: result = cmd_bench(config); break;
        case Command::report: result = cmd_report(config); break;
        }

        const auto text = render(result, config.format);
        if (config.output.empty()) {
            std::cout << text;
        } else {
            std::ofstream out(config.output, std::ios::binary);
            if (!out)
                throw InvalidRange(fmt::format("cannot write '{}'", config.output));
            out << text;
        }
        return exit_status(result);
    } catch (const Error& e) {
        std::cerr << "hypfib: " << e.what() << '\n';
        return exit_usage;
    }
}

} // namespace hypfib::cli
