#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support/helpers.hpp"

#include <hypfib/errors.hpp>
#include <hypfib/kfib.hpp>

using namespace hypfib;
using testing::P;
using testing::Z;

namespace {

RingElement poly(std::string_view text) { return P(PolyK::parse(text)); }

} // namespace

TEST_CASE("symbolic fib values")
{
    SeqCache c(KMode::symbolic());
    CHECK(c.fib(0) == poly("0"));
    CHECK(c.fib(1) == poly("1"));
    CHECK(c.fib(5) == poly("k^4 + 3k^2 + 1"));
    CHECK(c.fib(-1) == poly("1"));
    CHECK(c.fib(-2) == poly("-k"));
    CHECK(c.lowest_cached() <= -2);
}

TEST_CASE("lucas values")
{
    SeqCache c(KMode::symbolic());
    CHECK(c.lucas(0) == poly("2"));
    CHECK(c.lucas(1) == poly("k"));
    SeqCache one(KMode::numeric(1));
    CHECK(one.lucas(6) == Z(18));
}

TEST_CASE("k mode parsing")
{
    CHECK(KMode::parse("symbolic").is_symbolic());
    CHECK(KMode::parse("k").is_symbolic());
    CHECK(KMode::parse("3").ring() == RingKind::Integer);
    CHECK(KMode::parse("7/2").ring() == RingKind::Rational);
    CHECK(KMode::parse("7/2").label() == "7/2");
    CHECK(KMode::symbolic().radicand() == PolyK{4, 0, 1});
    CHECK(KMode::numeric(2).radicand() == PolyK(8));
    CHECK_THROWS_AS(KMode::parse("abc"), ParseError);
}

TEST_CASE("recurrence properties over symbolic k")
{
    SeqCache c(KMode::symbolic());
    auto k = c.k();
    for (SeqIndex n = -30; n <= 30; ++n) {
        CAPTURE(n);
        CHECK(c.fib(n + 1) == k * c.fib(n) + c.fib(n - 1));
        CHECK(c.lucas(n) == c.fib(n + 1) + c.fib(n - 1));
        CHECK(c.fib(n + 2) - c.fib(n - 2) == k * c.lucas(n));
    }
    for (SeqIndex n = 0; n <= 20; ++n)
        CHECK(c.fib(n) * c.fib(n) + c.fib(n + 1) * c.fib(n + 1) == c.fib(2 * n + 1));
}

TEST_CASE("integer k agrees with the brute-force oracle")
{
    for (long k : {1L, 2L, 3L, -2L}) {
        SeqCache c(KMode::numeric(k));
        for (SeqIndex n = -25; n <= 40; ++n) {
            CAPTURE(k);
            CAPTURE(n);
            CHECK(c.fib(n) == RingElement(oracle::fib(k, n)));
            CHECK(c.lucas(n) == RingElement(oracle::lucas(k, n)));
        }
    }
}

TEST_CASE("fib pair kernels")
{
    using Pair = std::pair<RingElement, RingElement>;
    CHECK(fib_pair_doubling(KMode::numeric(1), 10) == Pair{Z(55), Z(89)});
    CHECK(fib_pair_doubling(KMode::numeric(2), 4) == Pair{Z(12), Z(29)});
    CHECK(fib_pair_doubling(KMode::numeric(1), 0) == Pair{Z(0), Z(1)});
    CHECK(fib_pair_iterative(KMode::numeric(1), 10) == Pair{Z(55), Z(89)});
    CHECK_THROWS_AS(fib_pair_doubling(KMode::symbolic(), 5), SymbolicKUnsupported);

    for (auto mode : {KMode::numeric(1), KMode::numeric(2), KMode::numeric(3), KMode::numeric(make_rational(7, 2))}) {
        SeqCache c(mode);
        for (std::uint64_t n = 0; n <= 1000; ++n) {
            auto d = fib_pair_doubling(mode, n);
            auto it = fib_pair_iterative(mode, n);
            const auto sn = static_cast<SeqIndex>(n);
            if (d != it || d.first != c.fib(sn) || d.second != c.fib(sn + 1)) {
                FAIL_CHECK("kernel disagreement at k=" << mode.label() << " n=" << n);
                break;
            }
        }
    }
}

TEST_CASE("doubling multiplication count")
{
    for (std::uint64_t n : {1ULL, 2ULL, 3ULL, 1000ULL, 65536ULL, 1000000ULL}) {
        KernelStats stats;
        fib_pair_doubling(KMode::numeric(1), n, &stats);
        const std::size_t bound = n <= 1 ? 2 : 2 * std::bit_width(n - 1) + 2;
        CAPTURE(n);
        CHECK(stats.big_mults <= bound);
    }
}

TEST_CASE("negative index reflection")
{
    SeqCache c(KMode::symbolic());
    CHECK(fib_negate_index(1, poly("1")) == poly("1"));
    CHECK(fib_negate_index(2, poly("k")) == poly("-k"));
    CHECK(fib_negate_index(3, poly("k^2 + 1")) == poly("k^2 + 1"));
    for (auto mode : {KMode::symbolic(), KMode::numeric(3), KMode::numeric(make_rational(-1, 3))}) {
        SeqCache m(mode);
        for (SeqIndex n = 1; n <= 30; ++n)
            CHECK(fib_negate_index(static_cast<std::uint64_t>(n), m.fib(n)) == m.fib(-n));
    }
}

TEST_CASE("symbolic values specialize to numeric ones")
{
    SeqCache sym(KMode::symbolic());
    for (long kv : {1L, 2L}) {
        SeqCache num(KMode::numeric(kv));
        for (SeqIndex n = 0; n <= 30; ++n)
            CHECK(value_equal(specialize(sym.fib(n), kv), num.fib(n)));
    }
    SeqCache half(KMode::numeric(make_rational(1, 2)));
    for (SeqIndex n = -10; n <= 10; ++n)
        CHECK(specialize(sym.fib(n), make_rational(1, 2)) == half.fib(n));
}

TEST_CASE("symbolic results have integer coefficients")
{
    SeqCache c(KMode::symbolic());
    for (SeqIndex n = -20; n <= 40; ++n) {
        CHECK(c.fib(n).as<PolyK>().is_integral());
        CHECK(c.lucas(n).as<PolyK>().is_integral());
    }
}
