#pragma once

#include <hypfib/identities.hpp>

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace hypfib::cli {

inline constexpr int schema_version = 1;
inline constexpr std::string_view tool_name = "hypfib";
std::string_view tool_version();

enum class Format { json, csv, text };
Format parse_format(std::string_view text);

/// Which (identity, candidate) pairs decide the verify exit status. Loaded
/// from JSON of the form {"schema_version": 1, "asserted": {"ID": ["label"]}}.
class ExpectationTable {
public:
    static ExpectationTable builtin();
    static ExpectationTable from_json(std::string_view text);
    static ExpectationTable from_file(const std::string& path);

    bool asserted(std::string_view id, std::string_view label) const;
    const std::set<std::pair<std::string, std::string>>& entries() const noexcept { return entries_; }

private:
    std::set<std::pair<std::string, std::string>> entries_;
};

struct ConfigEcho {
    std::vector<std::string> k;
    std::pair<std::int64_t, std::int64_t> n{0, 0};
    std::pair<std::int64_t, std::int64_t> m{0, 0};
    std::pair<std::int64_t, std::int64_t> r{0, 0};
    std::vector<std::string> identities;

    friend bool operator==(const ConfigEcho&, const ConfigEcho&) = default;
};

struct CandidateView {
    std::string label;
    std::string verdict;
    bool asserted = false;
    std::string value;
    std::string residual;
    // Present for Binet candidates only.
    std::optional<bool> pure_surd;
    std::optional<std::string> extracted; // empty optional with pure_surd set renders as null

    friend bool operator==(const CandidateView&, const CandidateView&) = default;
};

struct RecordView {
    std::string id;
    int equation = 0;
    std::string k;
    std::vector<std::pair<std::string, std::int64_t>> params; // fixed order n, m, r
    bool within_hypothesis = true;
    std::string lhs;
    std::vector<CandidateView> candidates;
    std::vector<std::string> notes;

    // "k=symbolic n=1 m=2"
    std::string params_text() const;

    friend bool operator==(const RecordView&, const RecordView&) = default;
};

struct ErrataEntry {
    std::string id;
    std::string candidate;
    std::string first_k;
    std::vector<std::pair<std::string, std::int64_t>> first_params;
    std::string residual;
    std::size_t mismatches = 0;

    friend bool operator==(const ErrataEntry&, const ErrataEntry&) = default;
};

struct Summary {
    std::size_t records = 0;
    std::size_t candidates = 0;
    std::size_t exact = 0;
    std::size_t mismatch = 0;
    std::size_t asserted = 0;
    std::size_t asserted_mismatch = 0;

    friend bool operator==(const Summary&, const Summary&) = default;
};

struct GenRow {
    std::string k;
    std::int64_t n = 0;
    std::string fib;
    std::string lucas;
    std::string hfib;
    std::string hlucas;

    friend bool operator==(const GenRow&, const GenRow&) = default;
};

struct BenchRow {
    std::string k;
    std::uint64_t n = 0;
    bool equal = false;
    double iterative_ms = 0;
    double doubling_ms = 0;
    std::size_t iterative_mults = 0;
    std::size_t doubling_big_mults = 0;
    std::size_t doubling_bound = 0;

    friend bool operator==(const BenchRow&, const BenchRow&) = default;
};

/// Everything a command produces. Exactly one of rows / records / bench is
/// populated, according to `command`.
struct Report {
    std::string tool_version;
    std::string command;
    ConfigEcho config;
    std::vector<GenRow> rows;
    std::vector<RecordView> records;
    std::vector<ErrataEntry> errata;
    Summary summary;
    std::vector<BenchRow> bench;

    friend bool operator==(const Report&, const Report&) = default;
};

RecordView render_record(const VerificationRecord& rec, const ExpectationTable& expect);

// Builds records, errata and summary for a verify report.
void fill_verification(Report& report, const std::vector<VerificationRecord>& records,
                       const ExpectationTable& expect);

std::string to_json(const Report& report);
// Throws MalformedReport.
Report report_from_json(std::string_view text);
std::string to_csv(const Report& report);
std::string to_text(const Report& report);
std::string render(const Report& report, Format format);

// RFC-4180 field quoting.
std::string csv_field(std::string_view field);

} // namespace hypfib::cli
