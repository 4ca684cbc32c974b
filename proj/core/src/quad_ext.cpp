#include "hypfib/quad_ext.hpp"

#include "hypfib/errors.hpp"

#include <fmt/format.h>

#include <utility>

namespace hypfib {

QuadExt::QuadExt(PolyK rat, PolyK surd, PolyK radicand)
    : rat_(std::move(rat)), surd_(std::move(surd)), radicand_(std::move(radicand))
{
}

const PolyK& QuadExt::default_radicand()
{
    static const PolyK r{4, 0, 1};
    return r;
}

QuadExt QuadExt::alpha(const PolyK& k, const PolyK& radicand)
{
    const BigRational half(1, 2);
    return QuadExt(k * half, PolyK(half), radicand);
}

QuadExt QuadExt::beta(const PolyK& k, const PolyK& radicand)
{
    const BigRational half(1, 2);
    return QuadExt(k * half, PolyK(-half), radicand);
}

void QuadExt::require_same_ring(const QuadExt& rhs) const
{
    if (radicand_ != rhs.radicand_)
        throw RingMismatch(fmt::format("quadratic extensions with radicands '{}' and '{}'", radicand_.to_string(),
                                       rhs.radicand_.to_string()));
}

QuadExt QuadExt::operator-() const { return QuadExt(-rat_, -surd_, radicand_); }

QuadExt& QuadExt::operator+=(const QuadExt& rhs)
{
    require_same_ring(rhs);
    rat_ += rhs.rat_;
    surd_ += rhs.surd_;
    return *this;
}

QuadExt& QuadExt::operator-=(const QuadExt& rhs)
{
    require_same_ring(rhs);
    rat_ -= rhs.rat_;
    surd_ -= rhs.surd_;
    return *this;
}

QuadExt& QuadExt::operator*=(const QuadExt& rhs)
{
    require_same_ring(rhs);
    // (a + b s)(c + d s) = (ac + bd R) + (ad + bc) s
    PolyK rat = rat_ * rhs.rat_ + surd_ * rhs.surd_ * radicand_;
    PolyK surd = rat_ * rhs.surd_ + surd_ * rhs.rat_;
    rat_ = std::move(rat);
    surd_ = std::move(surd);
    return *this;
}

QuadExt QuadExt::eval(const BigRational& x) const
{
    return QuadExt(PolyK(rat_.eval(x)), PolyK(surd_.eval(x)), PolyK(radicand_.eval(x)));
}

std::string QuadExt::to_string() const
{
    if (surd_.is_zero())
        return rat_.to_string();
    auto surd = fmt::format("({}) sqrt({})", surd_.to_string(), radicand_.to_string());
    if (rat_.is_zero())
        return surd;
    return fmt::format("({}) + {}", rat_.to_string(), surd);
}

QuadExt quad_mul(const QuadExt& u, const QuadExt& v) { return u * v; }

PolyK quad_extract_surd(const QuadExt& u)
{
    if (!u.is_pure_surd())
        throw NonPureSurd(fmt::format("rational part '{}' is nonzero", u.rat_part().to_string()));
    return u.surd_part();
}

} // namespace hypfib
