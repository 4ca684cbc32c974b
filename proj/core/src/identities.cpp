#include "hypfib/identities.hpp"

#include "hypfib/errors.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace hypfib {

const std::array<IdentityId, 15>& all_identities()
{
    static constexpr std::array<IdentityId, 15> ids{
        IdentityId::recurrence, IdentityId::square,        IdentityId::unit_contraction, IdentityId::docagne,
        IdentityId::honsberger, IdentityId::lucas_sum,     IdentityId::lucas_diff,       IdentityId::conj_sum,
        IdentityId::conj_norm_sum, IdentityId::sum_all,    IdentityId::sum_odd,          IdentityId::sum_even,
        IdentityId::binet,      IdentityId::cassini,       IdentityId::catalan,
    };
    return ids;
}

std::string_view identity_name(IdentityId id)
{
    switch (id) {
    case IdentityId::recurrence: return "RECURRENCE";
    case IdentityId::square: return "SQUARE";
    case IdentityId::unit_contraction: return "UNIT_CONTRACTION";
    case IdentityId::docagne: return "DOCAGNE";
    case IdentityId::honsberger: return "HONSBERGER";
    case IdentityId::lucas_sum: return "LUCAS_SUM";
    case IdentityId::lucas_diff: return "LUCAS_DIFF";
    case IdentityId::conj_sum: return "CONJ_SUM";
    case IdentityId::conj_norm_sum: return "CONJ_NORM_SUM";
    case IdentityId::sum_all: return "SUM_ALL";
    case IdentityId::sum_odd: return "SUM_ODD";
    case IdentityId::sum_even: return "SUM_EVEN";
    case IdentityId::binet: return "BINET";
    case IdentityId::cassini: return "CASSINI";
    case IdentityId::catalan: return "CATALAN";
    }
    return "?";
}

int equation_number(IdentityId id) { return static_cast<int>(id); }

std::optional<IdentityId> parse_identity(std::string_view text)
{
    std::string upper;
    for (char c : text)
        upper += static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    for (auto id : all_identities()) {
        if (upper == identity_name(id) || upper == std::to_string(equation_number(id)))
            return id;
    }
    return std::nullopt;
}

bool uses_m(IdentityId id) { return id == IdentityId::docagne || id == IdentityId::honsberger; }
bool uses_r(IdentityId id) { return id == IdentityId::catalan; }

std::string_view to_string(Verdict v) { return v == Verdict::exact ? "EXACT" : "MISMATCH"; }

std::string to_string(const Params& p)
{
    std::string out = fmt::format("n={}", p.n);
    if (p.m)
        out += fmt::format(" m={}", *p.m);
    if (p.r)
        out += fmt::format(" r={}", *p.r);
    return out;
}

namespace {

HQuat product(const HQuat& a, const HQuat& b, ProductRule rule)
{
    return rule == ProductRule::formula ? hq_mul(a, b) : hq_mul_table(a, b);
}

// (-1)^e for any signed e.
RingElement sign_pow(SeqIndex e, const SeqCache& cache) { return cache.mode().from_int(e % 2 == 0 ? 1 : -1); }

Candidate candidate(std::string label, const HQuat& lhs, HQuat value)
{
    Candidate c;
    c.label = std::move(label);
    c.residual = lhs - value;
    c.verdict = c.residual.is_zero() ? Verdict::exact : Verdict::mismatch;
    c.value = std::move(value);
    return c;
}

VerificationRecord record(IdentityId id, const SeqCache& cache, Params params, bool hypothesis, HQuat lhs)
{
    VerificationRecord rec{id, params, cache.mode(), hypothesis, std::move(lhs), {}, {}};
    return rec;
}

// 2k i + 2(k^2+1) j + (k^3+2k) k, the vector shared by Cassini and the
// proof form of Catalan.
HQuat cassini_vector(SeqCache& cache)
{
    const auto& k = cache.k();
    const auto& mode = cache.mode();
    const auto two = mode.from_int(2);
    return HQuat(mode.from_int(0), two * k, two * (k * k + mode.from_int(1)), k * k * k + two * k);
}

// HF(1) + HF(-1) - 1
HQuat statement_unit_combo(SeqCache& cache)
{
    return hfib(cache, 1) + hfib(cache, -1) - HQuat::scalar(cache.mode().from_int(1));
}

} // namespace

VerificationRecord check_recurrence(SeqCache& cache, SeqIndex n, ProductRule)
{
    auto rec = record(IdentityId::recurrence, cache, Params::of(n), n >= 1, hfib(cache, n + 2));
    auto rhs = cache.k() * hfib(cache, n + 1) + hfib(cache, n);
    rec.candidates.push_back(candidate("rhs", rec.lhs, std::move(rhs)));
    return rec;
}

VerificationRecord check_square(SeqCache& cache, SeqIndex n, ProductRule rule)
{
    const auto q = hfib(cache, n);
    auto rec = record(IdentityId::square, cache, Params::of(n), n >= 1, product(q, q, rule));
    auto rhs = (cache.mode().from_int(2) * cache.fib(n)) * q - product(q, hq_conj(q), rule);
    rec.candidates.push_back(candidate("rhs", rec.lhs, std::move(rhs)));
    return rec;
}

VerificationRecord check_unit_contraction(SeqCache& cache, SeqIndex n, ProductRule rule)
{
    const auto& like = cache.k();
    auto lhs = hfib(cache, n) - product(HQuat::unit(Unit::i, like), hfib(cache, n + 1), rule) -
               product(HQuat::unit(Unit::j, like), hfib(cache, n + 2), rule) -
               product(HQuat::unit(Unit::e3, like), hfib(cache, n + 3), rule);
    auto rec = record(IdentityId::unit_contraction, cache, Params::of(n), n >= 1, std::move(lhs));
    auto rhs = HQuat::scalar(cache.fib(n) - cache.fib(n + 2) - cache.fib(n + 4) - cache.fib(n + 6));
    rec.candidates.push_back(candidate("rhs", rec.lhs, std::move(rhs)));
    return rec;
}

VerificationRecord check_docagne(SeqCache& cache, SeqIndex m, SeqIndex n, ProductRule rule)
{
    auto lhs = product(hfib(cache, m), hfib(cache, n + 1), rule) - product(hfib(cache, m + 1), hfib(cache, n), rule);
    auto rec = record(IdentityId::docagne, cache, {n, m, std::nullopt}, m >= n + 1, std::move(lhs));
    const auto sign = sign_pow(n, cache);
    const auto d = m - n;

    auto statement = (sign * cache.fib(d)) * statement_unit_combo(cache);
    rec.candidates.push_back(candidate("statement", rec.lhs, std::move(statement)));

    const auto two = cache.mode().from_int(2);
    const auto& k = cache.k();
    // k^3 + 3k
    const auto k3_3k = k * k * k + cache.mode().from_int(3) * k;
    auto proof = sign * HQuat(cache.mode().from_int(0), -(two * cache.fib(d - 1)), two * cache.fib(d - 2),
                              cache.lucas(d) + k3_3k * cache.fib(d));
    rec.candidates.push_back(candidate("proof", rec.lhs, std::move(proof)));

    rec.notes.emplace_back("statement form reads the DF_{k,1} symbol as HF_{k,1} and -1 as the scalar 1");
    rec.notes.emplace_back("statement form uses the variant (-1)^n F_{k,m-n} (HF_{k,1} + HF_{k,-1} - 1)");
    return rec;
}

VerificationRecord check_honsberger(SeqCache& cache, SeqIndex n, SeqIndex m, ProductRule rule)
{
    auto lhs = product(hfib(cache, n + 1), hfib(cache, m), rule) + product(hfib(cache, n), hfib(cache, m - 1), rule);
    auto rec = record(IdentityId::honsberger, cache, {n, m, std::nullopt}, n >= 0 && m >= 0, std::move(lhs));
    auto rhs = cache.mode().from_int(2) * hfib(cache, n + m) +
               HQuat::scalar(cache.k() * cache.fib(n + m + 1) + cache.lucas(n + m + 5));
    rec.candidates.push_back(candidate("rhs", rec.lhs, std::move(rhs)));
    rec.notes.emplace_back("scalar terms k F_{k,n+m+1} + L_{k,n+m+5} are added to the scalar component");
    return rec;
}

std::array<VerificationRecord, 2> check_lucas_relations(SeqCache& cache, SeqIndex n)
{
    auto sum = record(IdentityId::lucas_sum, cache, Params::of(n), n >= 1, hfib(cache, n + 1) + hfib(cache, n - 1));
    sum.candidates.push_back(candidate("rhs", sum.lhs, hlucas(cache, n)));

    auto diff = record(IdentityId::lucas_diff, cache, Params::of(n), n >= 1, hfib(cache, n + 2) - hfib(cache, n - 2));
    diff.candidates.push_back(candidate("rhs", diff.lhs, cache.k() * hlucas(cache, n)));
    return {std::move(sum), std::move(diff)};
}

std::array<VerificationRecord, 2> check_conj_identities(SeqCache& cache, SeqIndex n, ProductRule rule)
{
    const auto q = hfib(cache, n);
    auto sum = record(IdentityId::conj_sum, cache, Params::of(n), true, q + hq_conj(q));
    sum.candidates.push_back(candidate("rhs", sum.lhs, HQuat::scalar(cache.mode().from_int(2) * cache.fib(n))));

    const auto p = hfib(cache, n - 1);
    auto norm = record(IdentityId::conj_norm_sum, cache, Params::of(n), true,
                       product(q, hq_conj(q), rule) + product(p, hq_conj(p), rule));
    auto rhs = HQuat::scalar(cache.fib(2 * n - 1) - cache.fib(2 * n + 1) - cache.fib(2 * n + 3) -
                             cache.fib(2 * n + 5));
    norm.candidates.push_back(candidate("rhs", norm.lhs, std::move(rhs)));
    return {std::move(sum), std::move(norm)};
}

std::array<VerificationRecord, 3> check_sums(SeqCache& cache, SeqIndex n)
{
    if (n < 1)
        throw InvalidRange(fmt::format("sum identities need n >= 1, got {}", n));
    const auto& k = cache.k();
    const std::string note = "multiplied through by k: lhs is k times the sum";

    auto all = HQuat::zero_like(k);
    auto odd = HQuat::zero_like(k);
    auto even = HQuat::zero_like(k);
    for (SeqIndex s = 1; s <= n; ++s) {
        all += hfib(cache, s);
        odd += hfib(cache, 2 * s - 1);
        even += hfib(cache, 2 * s);
    }

    auto r_all = record(IdentityId::sum_all, cache, Params::of(n), true, k * all);
    r_all.candidates.push_back(candidate(
        "rhs", r_all.lhs, hfib(cache, n + 1) + hfib(cache, n) - hfib(cache, 1) - hfib(cache, 0)));
    r_all.notes.push_back(note);

    auto r_odd = record(IdentityId::sum_odd, cache, Params::of(n), true, k * odd);
    r_odd.candidates.push_back(candidate("rhs", r_odd.lhs, hfib(cache, 2 * n) - hfib(cache, 0)));
    r_odd.notes.push_back(note);

    auto r_even = record(IdentityId::sum_even, cache, Params::of(n), true, k * even);
    r_even.candidates.push_back(candidate("rhs", r_even.lhs, hfib(cache, 2 * n + 1) - hfib(cache, 1)));
    r_even.notes.push_back(note);

    return {std::move(r_all), std::move(r_odd), std::move(r_even)};
}

namespace {

HQuat to_quad(const HQuat& q, const PolyK& radicand)
{
    return HQuat(promote(q[0], RingKind::Quad, radicand), promote(q[1], RingKind::Quad, radicand),
                 promote(q[2], RingKind::Quad, radicand), promote(q[3], RingKind::Quad, radicand));
}

QuadExt power(const QuadExt& base, SeqIndex e)
{
    QuadExt acc(PolyK(1), PolyK{}, base.radicand());
    for (SeqIndex i = 0; i < e; ++i)
        acc *= base;
    return acc;
}

Candidate binet_candidate(std::string label, const HQuat& hf, const HQuat& lhs_times_s, const HQuat& value)
{
    Candidate c = candidate(std::move(label), lhs_times_s, value);
    bool pure = true;
    for (const auto& x : value.components())
        pure = pure && x.as<QuadExt>().is_pure_surd();
    c.pure_surd = pure;
    if (pure) {
        const auto& v = value.components();
        c.extracted = HQuat(RingElement(quad_extract_surd(v[0].as<QuadExt>())),
                            RingElement(quad_extract_surd(v[1].as<QuadExt>())),
                            RingElement(quad_extract_surd(v[2].as<QuadExt>())),
                            RingElement(quad_extract_surd(v[3].as<QuadExt>())));
    }
    const bool via_extraction = pure && hq_value_equal(*c.extracted, hf);
    if (via_extraction != (c.verdict == Verdict::exact))
        throw std::logic_error("Binet residual and surd extraction disagree");
    return c;
}

} // namespace

VerificationRecord binet(SeqCache& cache, SeqIndex n)
{
    if (n < 0)
        throw InvalidRange(fmt::format("Binet check needs n >= 0, got {}", n));

    const auto& mode = cache.mode();
    const PolyK radicand = mode.radicand();
    const QuadExt k(mode.k_poly(), PolyK{}, radicand);
    const QuadExt one(PolyK(1), PolyK{}, radicand);
    const QuadExt s(PolyK{}, PolyK(1), radicand);
    const QuadExt a = QuadExt::alpha(mode.k_poly(), radicand);
    const QuadExt b = QuadExt::beta(mode.k_poly(), radicand);
    const QuadExt k2_1 = k * k + one;
    const QuadExt two(PolyK(2), PolyK{}, radicand);
    const QuadExt k3_2k = k * k * k + two * k;

    auto q = [](QuadExt x0, QuadExt x1, QuadExt x2, QuadExt x3) {
        return HQuat(RingElement(std::move(x0)), RingElement(std::move(x1)), RingElement(std::move(x2)),
                     RingElement(std::move(x3)));
    };

    const auto hf = hfib(cache, n);
    const auto lhs_times_s = RingElement(s) * to_quad(hf, radicand);
    const RingElement a_n(power(a, n));
    const RingElement b_n(power(b, n));

    auto rec = record(IdentityId::binet, cache, Params::of(n), n >= 1, hf);

    // 1 + i x + j x^2 + k x^3
    auto powers_hat = [&](const QuadExt& x) { return q(one, x, x * x, x * x * x); };
    const auto alpha_hat = powers_hat(a);
    const auto beta_hat_proof = powers_hat(b);
    rec.candidates.push_back(binet_candidate("proof", hf, lhs_times_s, a_n * alpha_hat - b_n * beta_hat_proof));

    const auto alpha_hat_stmt = q(one, k - b, k2_1 - k * b, k3_2k - k2_1 * b);
    const auto beta_hat_stmt = q(-one, a - k, k * a - k2_1, k2_1 * a - k3_2k);
    rec.candidates.push_back(
        binet_candidate("statement", hf, lhs_times_s, a_n * alpha_hat_stmt - b_n * beta_hat_stmt));

    rec.notes.emplace_back("residual = sqrt(k^2+4) * lhs - value; value / sqrt(k^2+4) must equal lhs");
    return rec;
}

VerificationRecord check_cassini(SeqCache& cache, SeqIndex n, ProductRule rule)
{
    const auto mid = hfib(cache, n);
    auto lhs = product(hfib(cache, n - 1), hfib(cache, n + 1), rule) - product(mid, mid, rule);
    auto rec = record(IdentityId::cassini, cache, Params::of(n), n >= 1, std::move(lhs));
    rec.candidates.push_back(candidate("rhs", rec.lhs, sign_pow(n, cache) * cassini_vector(cache)));
    return rec;
}

VerificationRecord check_catalan(SeqCache& cache, SeqIndex n, SeqIndex r, ProductRule rule)
{
    const auto t = n + r;
    const auto mid = hfib(cache, t);
    auto lhs = product(hfib(cache, t - 1), hfib(cache, t + 1), rule) - product(mid, mid, rule);
    auto rec = record(IdentityId::catalan, cache, {n, std::nullopt, r}, n >= 1 && r >= 0, std::move(lhs));
    const auto sign = sign_pow(t, cache);
    rec.candidates.push_back(candidate("statement", rec.lhs, sign * statement_unit_combo(cache)));
    rec.candidates.push_back(candidate("proof", rec.lhs, sign * cassini_vector(cache)));
    rec.notes.emplace_back("lhs indexes n+r-1, n+r, n+r+1 as displayed");
    return rec;
}

std::optional<VerificationRecord> check(IdentityId id, SeqCache& cache, const Params& p, ProductRule rule)
{
    switch (id) {
    case IdentityId::recurrence: return check_recurrence(cache, p.n, rule);
    case IdentityId::square: return check_square(cache, p.n, rule);
    case IdentityId::unit_contraction: return check_unit_contraction(cache, p.n, rule);
    case IdentityId::docagne: return check_docagne(cache, p.m.value(), p.n, rule);
    case IdentityId::honsberger: return check_honsberger(cache, p.n, p.m.value(), rule);
    case IdentityId::lucas_sum: return std::move(check_lucas_relations(cache, p.n)[0]);
    case IdentityId::lucas_diff: return std::move(check_lucas_relations(cache, p.n)[1]);
    case IdentityId::conj_sum: return std::move(check_conj_identities(cache, p.n, rule)[0]);
    case IdentityId::conj_norm_sum: return std::move(check_conj_identities(cache, p.n, rule)[1]);
    case IdentityId::sum_all:
    case IdentityId::sum_odd:
    case IdentityId::sum_even: {
        if (p.n < 1)
            return std::nullopt;
        auto recs = check_sums(cache, p.n);
        auto slot = static_cast<std::size_t>(static_cast<int>(id) - static_cast<int>(IdentityId::sum_all));
        return std::move(recs[slot]);
    }
    case IdentityId::binet:
        if (p.n < 0)
            return std::nullopt;
        return binet(cache, p.n);
    case IdentityId::cassini: return check_cassini(cache, p.n, rule);
    case IdentityId::catalan: return check_catalan(cache, p.n, p.r.value(), rule);
    }
    return std::nullopt;
}

} // namespace hypfib
