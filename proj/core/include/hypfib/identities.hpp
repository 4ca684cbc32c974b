#pragma once

#include "hypfib/hquat.hpp"
#include "hypfib/kfib.hpp"

#include <array>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace hypfib {

// One id per verified closed form. Each id also has a stable number (15..29)
// accepted wherever an id is parsed.
enum class IdentityId {
    recurrence = 15,
    square = 16,
    unit_contraction = 17,
    docagne = 18,
    honsberger = 19,
    lucas_sum = 20,
    lucas_diff = 21,
    conj_sum = 22,
    conj_norm_sum = 23,
    sum_all = 24,
    sum_odd = 25,
    sum_even = 26,
    binet = 27,
    cassini = 28,
    catalan = 29,
};

const std::array<IdentityId, 15>& all_identities();
// "RECURRENCE", "SQUARE", ...
std::string_view identity_name(IdentityId id);
int equation_number(IdentityId id);
// Accepts the upper-case name in any case, or the equation number.
std::optional<IdentityId> parse_identity(std::string_view text);

// Which of n, m, r an identity is parameterized by (n always).
bool uses_m(IdentityId id);
bool uses_r(IdentityId id);

enum class Verdict { exact, mismatch };
std::string_view to_string(Verdict v);

// How lhs products are expanded: the written-out component formulas or the
// table-driven bilinear expansion. Both must give identical records.
enum class ProductRule { formula, table };

struct Params {
    SeqIndex n = 0;
    std::optional<SeqIndex> m;
    std::optional<SeqIndex> r;

    static Params of(SeqIndex n) { return {n, std::nullopt, std::nullopt}; }

    friend auto operator<=>(const Params&, const Params&) = default;
};

// "n=3", "n=3 m=5"
std::string to_string(const Params& p);

struct Candidate {
    std::string label; // "rhs", or "statement" / "proof" where the two differ
    HQuat value;
    HQuat residual; // lhs - value
    Verdict verdict = Verdict::mismatch;
    // Binet only: whether every component of value has zero rational part,
    // and value / sqrt(k^2+4) when it does.
    std::optional<bool> pure_surd;
    std::optional<HQuat> extracted;
};

struct VerificationRecord {
    IdentityId id;
    Params params;
    KMode mode = KMode::symbolic();
    // False when the parameters fall outside the hypothesis stated with the
    // identity (the record is still computed).
    bool within_hypothesis = true;
    HQuat lhs;
    std::vector<Candidate> candidates;
    std::vector<std::string> notes;
};

VerificationRecord check_recurrence(SeqCache& cache, SeqIndex n, ProductRule rule = ProductRule::formula);
VerificationRecord check_square(SeqCache& cache, SeqIndex n, ProductRule rule = ProductRule::formula);
VerificationRecord check_unit_contraction(SeqCache& cache, SeqIndex n, ProductRule rule = ProductRule::formula);
VerificationRecord check_docagne(SeqCache& cache, SeqIndex m, SeqIndex n, ProductRule rule = ProductRule::formula);
VerificationRecord check_honsberger(SeqCache& cache, SeqIndex n, SeqIndex m,
                                    ProductRule rule = ProductRule::formula);
// {LUCAS_SUM, LUCAS_DIFF}
std::array<VerificationRecord, 2> check_lucas_relations(SeqCache& cache, SeqIndex n);
// {CONJ_SUM, CONJ_NORM_SUM}
std::array<VerificationRecord, 2> check_conj_identities(SeqCache& cache, SeqIndex n,
                                                        ProductRule rule = ProductRule::formula);
// {SUM_ALL, SUM_ODD, SUM_EVEN}, each multiplied through by k. Requires n >= 1.
std::array<VerificationRecord, 3> check_sums(SeqCache& cache, SeqIndex n);
// Requires n >= 0. Candidates: "proof" (hat-beta = 1 + i beta + j beta^2 + k beta^3)
// and "statement" (hat-alpha, hat-beta in the displayed closed form).
VerificationRecord binet(SeqCache& cache, SeqIndex n);
VerificationRecord check_cassini(SeqCache& cache, SeqIndex n, ProductRule rule = ProductRule::formula);
VerificationRecord check_catalan(SeqCache& cache, SeqIndex n, SeqIndex r, ProductRule rule = ProductRule::formula);

// Single-record dispatch used by the suite runner. Returns nullopt for
// parameters outside a hard precondition (sums with n < 1, Binet with n < 0).
std::optional<VerificationRecord> check(IdentityId id, SeqCache& cache, const Params& params,
                                        ProductRule rule = ProductRule::formula);

struct IndexRange {
    SeqIndex lo = 0;
    SeqIndex hi = 0;
};

struct SuiteGrid {
    IndexRange n{1, 12};
    IndexRange m{2, 12};
    IndexRange r{0, 4};
};

// Largest |n| + |m| (or |n| + |r|) a symbolic grid may reach.
inline constexpr SeqIndex symbolic_degree_cap = 40;

/// Evaluates every id over the grid for every mode.
///
/// Records come back ordered by (id, params, mode position in `modes`), and
/// the output does not depend on `jobs`. Throws InvalidRange for lo > hi or
/// jobs == 0, GridTooLarge when a symbolic mode would exceed the degree cap.
std::vector<VerificationRecord> run_suite(std::span<const IdentityId> ids, const SuiteGrid& grid,
                                          std::span<const KMode> modes, unsigned jobs = 1,
                                          ProductRule rule = ProductRule::formula);

} // namespace hypfib
