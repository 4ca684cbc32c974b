#include "hypfib/ring_element.hpp"

#include "hypfib/errors.hpp"

#include <fmt/format.h>

namespace hypfib {

std::string_view to_string(RingKind kind)
{
    switch (kind) {
    case RingKind::Integer: return "integer";
    case RingKind::Rational: return "rational";
    case RingKind::Poly: return "poly";
    case RingKind::Quad: return "quad";
    }
    return "?";
}

namespace {

template <class Op>
void binary_in_place(RingElement::Storage& lhs, const RingElement::Storage& rhs, Op op)
{
    if (lhs.index() != rhs.index())
        throw RingMismatch(fmt::format("operands in rings '{}' and '{}'",
                                       to_string(static_cast<RingKind>(lhs.index())),
                                       to_string(static_cast<RingKind>(rhs.index()))));
    std::visit(
        [&](auto& a) {
            using T = std::decay_t<decltype(a)>;
            op(a, std::get<T>(rhs));
        },
        lhs);
}

} // namespace

bool RingElement::is_zero() const
{
    return std::visit(
        [](const auto& a) {
            using T = std::decay_t<decltype(a)>;
            if constexpr (std::is_same_v<T, PolyK> || std::is_same_v<T, QuadExt>)
                return a.is_zero();
            else
                return a == 0;
        },
        v_);
}

RingElement RingElement::operator-() const
{
    return std::visit([](const auto& a) -> RingElement {
        using T = std::decay_t<decltype(a)>;
        return T(-a);
    }, v_);
}

RingElement& RingElement::operator+=(const RingElement& rhs)
{
    binary_in_place(v_, rhs.v_, [](auto& a, const auto& b) { a += b; });
    return *this;
}

RingElement& RingElement::operator-=(const RingElement& rhs)
{
    binary_in_place(v_, rhs.v_, [](auto& a, const auto& b) { a -= b; });
    return *this;
}

RingElement& RingElement::operator*=(const RingElement& rhs)
{
    binary_in_place(v_, rhs.v_, [](auto& a, const auto& b) { a *= b; });
    return *this;
}

std::string RingElement::to_string() const
{
    return std::visit(
        [](const auto& a) -> std::string {
            using T = std::decay_t<decltype(a)>;
            if constexpr (std::is_same_v<T, PolyK> || std::is_same_v<T, QuadExt>)
                return a.to_string();
            else
                return hypfib::to_string(a);
        },
        v_);
}

RingElement promote(const RingElement& x, RingKind target, const PolyK& radicand)
{
    if (target < x.kind())
        throw RingMismatch(fmt::format("cannot promote {} to {}", to_string(x.kind()), to_string(target)));
    RingElement cur = x;
    while (cur.kind() < target) {
        switch (cur.kind()) {
        case RingKind::Integer: cur = RingElement(BigRational(cur.as<BigInt>())); break;
        case RingKind::Rational: cur = RingElement(PolyK(cur.as<BigRational>())); break;
        case RingKind::Poly: cur = RingElement(QuadExt(cur.as<PolyK>(), PolyK{}, radicand)); break;
        case RingKind::Quad: break;
        }
    }
    return cur;
}

std::optional<RingElement> demote(const RingElement& x, RingKind target)
{
    RingElement cur = x;
    while (cur.kind() > target) {
        switch (cur.kind()) {
        case RingKind::Quad: {
            const auto& u = cur.as<QuadExt>();
            if (!u.surd_part().is_zero())
                return std::nullopt;
            cur = RingElement(u.rat_part());
            break;
        }
        case RingKind::Poly: {
            const auto& p = cur.as<PolyK>();
            if (!p.is_constant())
                return std::nullopt;
            cur = RingElement(p.coeff(0));
            break;
        }
        case RingKind::Rational: {
            const auto& q = cur.as<BigRational>();
            if (!is_integer(q))
                return std::nullopt;
            cur = RingElement(BigInt(q.get_num()));
            break;
        }
        case RingKind::Integer: break;
        }
    }
    return cur;
}

RingElement lift_int(long v, const RingElement& like)
{
    const PolyK& radicand =
        like.kind() == RingKind::Quad ? like.as<QuadExt>().radicand() : QuadExt::default_radicand();
    return promote(RingElement(BigInt(v)), like.kind(), radicand);
}

RingElement zero_like(const RingElement& like) { return lift_int(0, like); }
RingElement one_like(const RingElement& like) { return lift_int(1, like); }

RingElement specialize(const RingElement& x, const BigRational& at)
{
    switch (x.kind()) {
    case RingKind::Integer:
    case RingKind::Rational: return x;
    case RingKind::Poly: return RingElement(x.as<PolyK>().eval(at));
    case RingKind::Quad: return RingElement(x.as<QuadExt>().eval(at));
    }
    return x;
}

bool value_equal(const RingElement& a, const RingElement& b)
{
    if (a.kind() == b.kind())
        return a == b;
    const auto& hi = a.kind() > b.kind() ? a : b;
    const auto& lo = a.kind() > b.kind() ? b : a;
    const PolyK& radicand =
        hi.kind() == RingKind::Quad ? hi.as<QuadExt>().radicand() : QuadExt::default_radicand();
    return promote(lo, hi.kind(), radicand) == hi;
}

} // namespace hypfib
