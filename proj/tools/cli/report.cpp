#include "report.hpp"

#include "expectations_default.hpp"

#include <hypfib/errors.hpp>

#include <fmt/format.h>
#include <json.hpp>

#include <fstream>
#include <map>
#include <sstream>

namespace hypfib::cli {

using json = nlohmann::ordered_json;

std::string_view tool_version() { return HYPFIB_VERSION; }

Format parse_format(std::string_view text)
{
    if (text == "json")
        return Format::json;
    if (text == "csv")
        return Format::csv;
    if (text == "text")
        return Format::text;
    throw InvalidRange(fmt::format("unknown format '{}'", text));
}

// ---- expectation table ------------------------------------------------------

ExpectationTable ExpectationTable::builtin() { return from_json(default_expectations_json); }

ExpectationTable ExpectationTable::from_json(std::string_view text)
{
    ExpectationTable t;
    try {
        auto doc = json::parse(text);
        if (doc.at("schema_version").get<int>() != schema_version)
            throw MalformedReport("unsupported expectation table schema_version");
        for (const auto& [id, labels] : doc.at("asserted").items()) {
            if (!parse_identity(id))
                throw MalformedReport(fmt::format("expectation table names unknown identity '{}'", id));
            for (const auto& label : labels)
                t.entries_.emplace(id, label.get<std::string>());
        }
    } catch (const json::exception& e) {
        throw MalformedReport(fmt::format("bad expectation table: {}", e.what()));
    }
    return t;
}

ExpectationTable ExpectationTable::from_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw MalformedReport(fmt::format("cannot read expectation table '{}'", path));
    std::stringstream ss;
    ss << in.rdbuf();
    return from_json(ss.str());
}

bool ExpectationTable::asserted(std::string_view id, std::string_view label) const
{
    return entries_.contains({std::string(id), std::string(label)});
}

// ---- records ---------------------------------------------------------------------

namespace {

std::vector<std::pair<std::string, std::int64_t>> param_list(const Params& p)
{
    std::vector<std::pair<std::string, std::int64_t>> out{{"n", p.n}};
    if (p.m)
        out.emplace_back("m", *p.m);
    if (p.r)
        out.emplace_back("r", *p.r);
    return out;
}

std::string params_text(std::string_view k, const std::vector<std::pair<std::string, std::int64_t>>& params)
{
    std::string out = fmt::format("k={}", k);
    for (const auto& [name, value] : params)
        out += fmt::format(" {}={}", name, value);
    return out;
}

} // namespace

std::string RecordView::params_text() const { return cli::params_text(k, params); }

RecordView render_record(const VerificationRecord& rec, const ExpectationTable& expect)
{
    RecordView v;
    v.id = std::string(identity_name(rec.id));
    v.equation = equation_number(rec.id);
    v.k = rec.mode.label();
    v.params = param_list(rec.params);
    v.within_hypothesis = rec.within_hypothesis;
    v.lhs = rec.lhs.to_string();
    for (const auto& c : rec.candidates) {
        CandidateView cv;
        cv.label = c.label;
        cv.verdict = std::string(to_string(c.verdict));
        cv.asserted = expect.asserted(v.id, c.label);
        cv.value = c.value.to_string();
        cv.residual = c.residual.to_string();
        cv.pure_surd = c.pure_surd;
        if (c.extracted)
            cv.extracted = c.extracted->to_string();
        v.candidates.push_back(std::move(cv));
    }
    v.notes = rec.notes;
    return v;
}

void fill_verification(Report& report, const std::vector<VerificationRecord>& records, const ExpectationTable& expect)
{
    report.records.clear();
    report.errata.clear();
    report.summary = {};

    std::map<std::pair<std::string, std::string>, std::size_t> errata_index;
    for (const auto& rec : records) {
        auto view = render_record(rec, expect);
        ++report.summary.records;
        for (const auto& c : view.candidates) {
            ++report.summary.candidates;
            const bool exact = c.verdict == "EXACT";
            ++(exact ? report.summary.exact : report.summary.mismatch);
            if (c.asserted) {
                ++report.summary.asserted;
                if (!exact)
                    ++report.summary.asserted_mismatch;
            }
            if (exact)
                continue;
            auto key = std::make_pair(view.id, c.label);
            auto it = errata_index.find(key);
            if (it == errata_index.end()) {
                errata_index.emplace(key, report.errata.size());
                report.errata.push_back({view.id, c.label, view.k, view.params, c.residual, 1});
            } else {
                ++report.errata[it->second].mismatches;
            }
        }
        report.records.push_back(std::move(view));
    }
}

// ---- JSON ------------------------------------------------------------------------

namespace {

json params_json(const std::vector<std::pair<std::string, std::int64_t>>& params)
{
    json out = json::object();
    for (const auto& [name, value] : params)
        out[name] = value;
    return out;
}

json config_json(const ConfigEcho& c)
{
    json out;
    out["k"] = c.k;
    out["n"] = {c.n.first, c.n.second};
    out["m"] = {c.m.first, c.m.second};
    out["r"] = {c.r.first, c.r.second};
    out["identities"] = c.identities;
    return out;
}

json record_json(const RecordView& r)
{
    json out;
    out["id"] = r.id;
    out["equation"] = r.equation;
    out["k"] = r.k;
    out["params"] = params_json(r.params);
    out["within_hypothesis"] = r.within_hypothesis;
    out["lhs"] = r.lhs;
    json cands = json::array();
    for (const auto& c : r.candidates) {
        json cj;
        cj["label"] = c.label;
        cj["verdict"] = c.verdict;
        cj["asserted"] = c.asserted;
        cj["value"] = c.value;
        cj["residual"] = c.residual;
        if (c.pure_surd) {
            cj["pure_surd"] = *c.pure_surd;
            cj["extracted"] = c.extracted ? json(*c.extracted) : json(nullptr);
        }
        cands.push_back(std::move(cj));
    }
    out["candidates"] = std::move(cands);
    out["notes"] = r.notes;
    return out;
}

} // namespace

std::string to_json(const Report& report)
{
    json doc;
    doc["schema_version"] = schema_version;
    doc["tool"] = std::string(tool_name);
    doc["tool_version"] = report.tool_version;
    doc["command"] = report.command;
    doc["config"] = config_json(report.config);

    if (report.command == "gen") {
        json rows = json::array();
        for (const auto& r : report.rows)
            rows.push_back({{"k", r.k}, {"n", r.n}, {"F", r.fib}, {"L", r.lucas}, {"HF", r.hfib}, {"HL", r.hlucas}});
        doc["rows"] = std::move(rows);
    } else if (report.command == "verify") {
        json records = json::array();
        for (const auto& r : report.records)
            records.push_back(record_json(r));
        doc["records"] = std::move(records);
        json errata = json::array();
        for (const auto& e : report.errata) {
            errata.push_back({{"id", e.id},
                              {"candidate", e.candidate},
                              {"mismatches", e.mismatches},
                              {"first_mismatch", {{"k", e.first_k}, {"params", params_json(e.first_params)}}},
                              {"residual", e.residual}});
        }
        doc["errata"] = std::move(errata);
        const auto& s = report.summary;
        doc["summary"] = {{"records", s.records},   {"candidates", s.candidates}, {"exact", s.exact},
                          {"mismatch", s.mismatch}, {"asserted", s.asserted},     {"asserted_mismatch", s.asserted_mismatch}};
    } else if (report.command == "bench") {
        json rows = json::array();
        for (const auto& b : report.bench) {
            rows.push_back({{"k", b.k},
                            {"n", b.n},
                            {"equal", b.equal},
                            {"iterative_ms", b.iterative_ms},
                            {"doubling_ms", b.doubling_ms},
                            {"iterative_mults", b.iterative_mults},
                            {"doubling_big_mults", b.doubling_big_mults},
                            {"doubling_bound", b.doubling_bound}});
        }
        doc["bench"] = std::move(rows);
    }
    return doc.dump(2) + "\n";
}

namespace {

std::vector<std::pair<std::string, std::int64_t>> params_from(const json& j)
{
    std::vector<std::pair<std::string, std::int64_t>> out;
    for (const auto& [name, value] : j.items()) {
        if (name != "n" && name != "m" && name != "r")
            throw MalformedReport(fmt::format("unknown parameter '{}'", name));
        out.emplace_back(name, value.get<std::int64_t>());
    }
    if (out.empty() || out.front().first != "n")
        throw MalformedReport("params must start with n");
    return out;
}

std::pair<std::int64_t, std::int64_t> range_from(const json& j)
{
    if (!j.is_array() || j.size() != 2)
        throw MalformedReport("range must be a two-element array");
    return {j[0].get<std::int64_t>(), j[1].get<std::int64_t>()};
}

} // namespace

Report report_from_json(std::string_view text)
{
    Report r;
    try {
        const auto doc = json::parse(text);
        if (doc.at("schema_version").get<int>() != schema_version)
            throw MalformedReport("unsupported schema_version");
        if (doc.at("tool").get<std::string>() != tool_name)
            throw MalformedReport("not a hypfib report");
        r.tool_version = doc.at("tool_version").get<std::string>();
        r.command = doc.at("command").get<std::string>();

        const auto& c = doc.at("config");
        r.config.k = c.at("k").get<std::vector<std::string>>();
        r.config.n = range_from(c.at("n"));
        r.config.m = range_from(c.at("m"));
        r.config.r = range_from(c.at("r"));
        r.config.identities = c.at("identities").get<std::vector<std::string>>();

        if (r.command == "gen") {
            for (const auto& row : doc.at("rows"))
                r.rows.push_back({row.at("k").get<std::string>(), row.at("n").get<std::int64_t>(),
                                  row.at("F").get<std::string>(), row.at("L").get<std::string>(),
                                  row.at("HF").get<std::string>(), row.at("HL").get<std::string>()});
        } else if (r.command == "verify") {
            for (const auto& rec : doc.at("records")) {
                RecordView v;
                v.id = rec.at("id").get<std::string>();
                if (!parse_identity(v.id))
                    throw MalformedReport(fmt::format("unknown identity '{}'", v.id));
                v.equation = rec.at("equation").get<int>();
                v.k = rec.at("k").get<std::string>();
                v.params = params_from(rec.at("params"));
                v.within_hypothesis = rec.at("within_hypothesis").get<bool>();
                v.lhs = rec.at("lhs").get<std::string>();
                for (const auto& cj : rec.at("candidates")) {
                    CandidateView cv;
                    cv.label = cj.at("label").get<std::string>();
                    cv.verdict = cj.at("verdict").get<std::string>();
                    if (cv.verdict != "EXACT" && cv.verdict != "MISMATCH")
                        throw MalformedReport(fmt::format("unknown verdict '{}'", cv.verdict));
                    cv.asserted = cj.at("asserted").get<bool>();
                    cv.value = cj.at("value").get<std::string>();
                    cv.residual = cj.at("residual").get<std::string>();
                    if (cj.contains("pure_surd")) {
                        cv.pure_surd = cj.at("pure_surd").get<bool>();
                        const auto& ex = cj.at("extracted");
                        if (!ex.is_null())
                            cv.extracted = ex.get<std::string>();
                    }
                    v.candidates.push_back(std::move(cv));
                }
                v.notes = rec.at("notes").get<std::vector<std::string>>();
                r.records.push_back(std::move(v));
            }
            for (const auto& e : doc.at("errata")) {
                const auto& first = e.at("first_mismatch");
                r.errata.push_back({e.at("id").get<std::string>(), e.at("candidate").get<std::string>(),
                                    first.at("k").get<std::string>(), params_from(first.at("params")),
                                    e.at("residual").get<std::string>(), e.at("mismatches").get<std::size_t>()});
            }
            const auto& s = doc.at("summary");
            r.summary = {s.at("records").get<std::size_t>(),  s.at("candidates").get<std::size_t>(),
                         s.at("exact").get<std::size_t>(),    s.at("mismatch").get<std::size_t>(),
                         s.at("asserted").get<std::size_t>(), s.at("asserted_mismatch").get<std::size_t>()};
            if (r.summary.records != r.records.size())
                throw MalformedReport("summary record count disagrees with records");
        } else if (r.command == "bench") {
            for (const auto& b : doc.at("bench"))
                r.bench.push_back({b.at("k").get<std::string>(), b.at("n").get<std::uint64_t>(),
                                   b.at("equal").get<bool>(), b.at("iterative_ms").get<double>(),
                                   b.at("doubling_ms").get<double>(), b.at("iterative_mults").get<std::size_t>(),
                                   b.at("doubling_big_mults").get<std::size_t>(),
                                   b.at("doubling_bound").get<std::size_t>()});
        } else {
            throw MalformedReport(fmt::format("unknown command '{}'", r.command));
        }
    } catch (const json::exception& e) {
        throw MalformedReport(fmt::format("malformed report: {}", e.what()));
    }
    return r;
}

// ---- CSV / text -----------------------------------------------------------------

std::string csv_field(std::string_view field)
{
    if (field.find_first_of(",\"\r\n") == std::string_view::npos)
        return std::string(field);
    std::string out = "\"";
    for (char c : field) {
        if (c == '"')
            out += '"';
        out += c;
    }
    out += '"';
    return out;
}

namespace {

std::string csv_line(std::initializer_list<std::string_view> fields)
{
    std::string out;
    bool first = true;
    for (auto f : fields) {
        if (!first)
            out += ',';
        first = false;
        out += csv_field(f);
    }
    out += "\r\n";
    return out;
}

} // namespace

std::string to_csv(const Report& report)
{
    std::string out;
    if (report.command == "gen") {
        out += csv_line({"k", "n", "F", "L", "HF", "HL"});
        for (const auto& r : report.rows)
            out += csv_line({r.k, std::to_string(r.n), r.fib, r.lucas, r.hfib, r.hlucas});
    } else if (report.command == "verify") {
        out += csv_line({"id", "params", "candidate", "verdict", "residual"});
        for (const auto& rec : report.records) {
            const auto params = rec.params_text();
            for (const auto& c : rec.candidates)
                out += csv_line({rec.id, params, c.label, c.verdict, c.residual});
        }
    } else if (report.command == "bench") {
        out += csv_line({"k", "n", "equal", "iterative_ms", "doubling_ms", "iterative_mults", "doubling_big_mults",
                         "doubling_bound"});
        for (const auto& b : report.bench)
            out += csv_line({b.k, std::to_string(b.n), b.equal ? "true" : "false", fmt::format("{:.3f}", b.iterative_ms),
                             fmt::format("{:.3f}", b.doubling_ms), std::to_string(b.iterative_mults),
                             std::to_string(b.doubling_big_mults), std::to_string(b.doubling_bound)});
    }
    return out;
}

std::string to_text(const Report& report)
{
    std::string out = fmt::format("{} {} {}\n", tool_name, report.tool_version, report.command);
    if (report.command == "gen") {
        for (const auto& r : report.rows) {
            out += fmt::format("k={} n={}\n  F  = {}\n  L  = {}\n  HF = {}\n  HL = {}\n", r.k, r.n, r.fib, r.lucas,
                               r.hfib, r.hlucas);
        }
    } else if (report.command == "verify") {
        const auto& s = report.summary;
        out += fmt::format("records: {}  candidates: {}  exact: {}  mismatch: {}  asserted: {}  asserted mismatches: {}\n",
                           s.records, s.candidates, s.exact, s.mismatch, s.asserted, s.asserted_mismatch);
        for (const auto& rec : report.records) {
            out += fmt::format("\n{} ({}) {}{}\n  lhs: {}\n", rec.id, rec.equation, rec.params_text(),
                               rec.within_hypothesis ? "" : " [outside hypothesis]", rec.lhs);
            for (const auto& c : rec.candidates) {
                out += fmt::format("  {:<10} {:<8}{}", c.label, c.verdict, c.asserted ? " (asserted)" : "");
                if (c.verdict != "EXACT")
                    out += fmt::format("  residual: {}", c.residual);
                out += '\n';
            }
        }
        out += "\nerrata:\n";
        if (report.errata.empty())
            out += "  (none)\n";
        for (const auto& e : report.errata)
            out += fmt::format("  {}/{}: {} mismatching records, first at {}\n    residual: {}\n", e.id, e.candidate,
                               e.mismatches, params_text(e.first_k, e.first_params), e.residual);
    } else if (report.command == "bench") {
        out += fmt::format("{:>8} {:>9} {:>6} {:>14} {:>13} {:>10} {:>10}\n", "k", "n", "equal", "iterative_ms",
                           "doubling_ms", "big_mults", "bound");
        for (const auto& b : report.bench)
            out += fmt::format("{:>8} {:>9} {:>6} {:>14.3f} {:>13.3f} {:>10} {:>10}\n", b.k, b.n, b.equal ? "yes" : "NO",
                               b.iterative_ms, b.doubling_ms, b.doubling_big_mults, b.doubling_bound);
    }
    return out;
}

std::string render(const Report& report, Format format)
{
    switch (format) {
    case Format::json: return to_json(report);
    case Format::csv: return to_csv(report);
    case Format::text: return to_text(report);
    }
    return {};
}

} // namespace hypfib::cli
