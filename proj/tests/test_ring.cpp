#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support/helpers.hpp"

#include <hypfib/errors.hpp>
#include <hypfib/quad_ext.hpp>
#include <hypfib/ring_element.hpp>

using namespace hypfib;
using testing::random_poly;

namespace {

const PolyK k = PolyK::k();

PolyK p(std::string_view text) { return PolyK::parse(text); }

} // namespace

TEST_CASE("poly addition")
{
    CHECK(k + PolyK{} == k);
    CHECK(p("k^2 + 1") + p("k^3 + 2k") == p("k^3 + k^2 + 2k + 1"));
    auto f5 = p("k^4 + 3k^2 + 1");
    CHECK((f5 + -f5).is_zero());
    CHECK((f5 + -f5).coeffs().empty());
    CHECK(poly_add(k, k) == PolyK::monomial(2, 1));
}

TEST_CASE("poly multiplication")
{
    CHECK(k * p("k^2 + 1") == p("k^3 + k"));
    CHECK(PolyK(1) * p("k^3 + 2k") == p("k^3 + 2k"));
    CHECK(poly_mul(k, p("k^3 + 2k")) + p("k^2 + 1") == p("k^4 + 3k^2 + 1"));
    CHECK((PolyK{} * k).is_zero());
}

TEST_CASE("poly evaluation")
{
    CHECK(poly_eval(p("k^4 + 3k^2 + 1"), 1) == 5);
    CHECK(poly_eval(p("k^3 + 2k"), 2) == 12);
    CHECK(poly_eval(PolyK{}, make_rational(7, 3)) == 0);
    CHECK(p("k^2").eval(make_rational(1, 2)) == make_rational(1, 4));
}

TEST_CASE("poly rendering")
{
    CHECK(PolyK{}.to_string() == "0");
    CHECK(k.to_string() == "k");
    CHECK(p("k^3 + 2k").to_string() == "k^3 + 2k");
    CHECK(PolyK{-3, make_rational(1, 2), -1}.to_string() == "-k^2 + (1/2)k - 3");
    CHECK(PolyK(make_rational(7, 2)).to_string() == "7/2");
    CHECK(PolyK(-1).to_string() == "-1");
}

TEST_CASE("poly parsing")
{
    CHECK(p("  k^3 +2*k ") == PolyK{0, 2, 0, 1});
    CHECK(p("(1/2)k - 3") == PolyK{-3, make_rational(1, 2)});
    CHECK(p("-k") == -k);
    CHECK(p("0").is_zero());
    CHECK_THROWS_AS(p("k^"), ParseError);
    CHECK_THROWS_AS(p("k + + 1"), ParseError);
    CHECK_THROWS_AS(p("1/0"), ParseError);
    CHECK_THROWS_AS(p("x"), ParseError);
}

TEST_CASE("render then parse is the identity")
{
    std::mt19937_64 rng(11);
    for (int t = 0; t < 300; ++t) {
        auto q = random_poly(rng, 6);
        CHECK(PolyK::parse(q.to_string()) == q);
    }
}

TEST_CASE("polynomial ring axioms")
{
    std::mt19937_64 rng(12);
    std::uniform_int_distribution<long> num(-20, 20), den(1, 6);
    for (int t = 0; t < 200; ++t) {
        auto a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a + b == b + a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * b == b * a);
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * PolyK(1) == a);
        CHECK(a + PolyK{} == a);
        auto x = make_rational(num(rng), den(rng));
        CHECK(poly_eval(poly_mul(a, b), x) == poly_eval(a, x) * poly_eval(b, x));
        CHECK(poly_eval(a + b, x) == poly_eval(a, x) + poly_eval(b, x));
    }
}

TEST_CASE("quadratic extension")
{
    const auto& r = QuadExt::default_radicand();
    auto alpha = QuadExt::alpha(k, r), beta = QuadExt::beta(k, r);
    auto s = QuadExt(PolyK{}, PolyK(1));

    CHECK(alpha * beta == QuadExt(PolyK(-1)));
    CHECK(alpha + beta == QuadExt(k));
    auto ss = s * s;
    CHECK(ss.rat_part() == p("k^2 + 4"));
    CHECK(ss.surd_part().is_zero());

    CHECK(quad_extract_surd(QuadExt(PolyK{}, k)) == k);
    CHECK(quad_extract_surd(alpha - beta) == PolyK(1));
    CHECK(quad_extract_surd(alpha * alpha - beta * beta) == k);
    CHECK_THROWS_AS(quad_extract_surd(alpha), NonPureSurd);

    // alpha is a root of t^2 - k t - 1
    CHECK((alpha * alpha - QuadExt(k) * alpha - QuadExt(PolyK(1))).is_zero());

    QuadExt other(k, PolyK(1), PolyK(5));
    CHECK_THROWS_AS(alpha + other, RingMismatch);
}

TEST_CASE("quadratic extension multiplication commutes and associates")
{
    // Cross-check against k = 1, where s^2 = 5: (a + b s)(c + d s) = (ac + 5bd) + (ad + bc) s.
    std::mt19937_64 rng(13);
    auto eval_pair = [](const QuadExt& u) { return std::pair{u.rat_part().eval(1), u.surd_part().eval(1)}; };
    for (int t = 0; t < 200; ++t) {
        QuadExt u(random_poly(rng, 3), random_poly(rng, 3));
        QuadExt v(random_poly(rng, 3), random_poly(rng, 3));
        QuadExt w(random_poly(rng, 3), random_poly(rng, 3));
        CHECK(u * v == v * u);
        CHECK((u * v) * w == u * (v * w));
        CHECK(u * (v + w) == u * v + u * w);

        auto [a, b] = eval_pair(u);
        auto [c, d] = eval_pair(v);
        auto [x, y] = eval_pair(quad_mul(u, v));
        CHECK(x == a * c + 5 * b * d);
        CHECK(y == a * d + b * c);
    }
}

TEST_CASE("ring elements")
{
    auto two = testing::Z(2);
    CHECK(two * two == testing::Z(4));
    CHECK_THROWS_AS(two + RingElement(make_rational(1, 2)), RingMismatch);
    CHECK_THROWS_AS(two * RingElement(k), RingMismatch);
    CHECK(RingElement(k).to_string() == "k");

    SUBCASE("promotion then demotion round-trips")
    {
        for (auto kind : {RingKind::Rational, RingKind::Poly, RingKind::Quad}) {
            auto up = promote(two, kind);
            CHECK(up.kind() == kind);
            auto down = demote(up, RingKind::Integer);
            REQUIRE(down.has_value());
            CHECK(*down == two);
        }
        auto half = RingElement(make_rational(1, 2));
        CHECK(*demote(promote(half, RingKind::Poly), RingKind::Rational) == half);
        CHECK_FALSE(demote(half, RingKind::Integer).has_value());
        CHECK_FALSE(demote(RingElement(k), RingKind::Rational).has_value());
    }

    SUBCASE("value equality across kinds")
    {
        CHECK(value_equal(two, RingElement(PolyK(2))));
        CHECK_FALSE(value_equal(two, RingElement(k)));
    }

    SUBCASE("specialization")
    {
        auto f5 = RingElement(p("k^4 + 3k^2 + 1"));
        CHECK(specialize(f5, 2) == RingElement(BigRational(29)));
    }
}
