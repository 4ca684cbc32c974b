#include "hypfib/hquat.hpp"

#include "hypfib/errors.hpp"

#include <fmt/format.h>

#include <algorithm>

namespace hypfib {

HQuat::HQuat() = default;

HQuat::HQuat(RingElement q0, RingElement q1, RingElement q2, RingElement q3)
    : c_{std::move(q0), std::move(q1), std::move(q2), std::move(q3)}
{
    for (std::size_t i = 1; i < 4; ++i)
        if (c_[i].kind() != c_[0].kind())
            throw RingMismatch(fmt::format("quaternion component {} is {} but component 0 is {}", i,
                                           hypfib::to_string(c_[i].kind()), hypfib::to_string(c_[0].kind())));
}

HQuat HQuat::scalar(RingElement c)
{
    auto z = hypfib::zero_like(c);
    return HQuat(std::move(c), z, z, z);
}

HQuat HQuat::zero_like(const RingElement& like)
{
    auto z = hypfib::zero_like(like);
    return HQuat(z, z, z, z);
}

HQuat HQuat::unit(Unit u, const RingElement& like)
{
    auto q = zero_like(like);
    q.c_[static_cast<std::size_t>(u)] = one_like(like);
    return q;
}

bool HQuat::is_zero() const
{
    return std::all_of(c_.begin(), c_.end(), [](const RingElement& x) { return x.is_zero(); });
}

bool HQuat::vector_is_zero() const { return c_[1].is_zero() && c_[2].is_zero() && c_[3].is_zero(); }

HQuat HQuat::operator-() const { return HQuat(-c_[0], -c_[1], -c_[2], -c_[3]); }

HQuat& HQuat::operator+=(const HQuat& rhs)
{
    for (std::size_t i = 0; i < 4; ++i)
        c_[i] += rhs.c_[i];
    return *this;
}

HQuat& HQuat::operator-=(const HQuat& rhs)
{
    for (std::size_t i = 0; i < 4; ++i)
        c_[i] -= rhs.c_[i];
    return *this;
}

HQuat operator*(const HQuat& a, const HQuat& b) { return hq_mul(a, b); }

HQuat operator*(const RingElement& c, const HQuat& a)
{
    return HQuat(c * a.c_[0], c * a.c_[1], c * a.c_[2], c * a.c_[3]);
}

std::string HQuat::to_string() const
{
    return fmt::format("({}) + ({}) i + ({}) j + ({}) k", c_[0].to_string(), c_[1].to_string(), c_[2].to_string(),
                       c_[3].to_string());
}

HQuat hq_add(const HQuat& a, const HQuat& b) { return a + b; }
HQuat hq_sub(const HQuat& a, const HQuat& b) { return a - b; }

HQuat hq_mul(const HQuat& a, const HQuat& b)
{
    const auto& [a0, a1, a2, a3] = a.components();
    const auto& [b0, b1, b2, b3] = b.components();
    return HQuat(a0 * b0 + a1 * b1 + a2 * b2 + a3 * b3,
                 a0 * b1 + a1 * b0 + a2 * b3 - a3 * b2,
                 a0 * b2 + a2 * b0 - a1 * b3 + a3 * b1,
                 a0 * b3 + a3 * b0 + a1 * b2 - a2 * b1);
}

HQuat hq_mul_table(const HQuat& a, const HQuat& b)
{
    std::array<RingElement, 4> acc;
    acc.fill(hypfib::zero_like(a[0]));
    for (std::size_t x = 0; x < 4; ++x) {
        for (std::size_t y = 0; y < 4; ++y) {
            const auto e = UnitTable::product(static_cast<Unit>(x), static_cast<Unit>(y));
            auto term = a[x] * b[y];
            auto& slot = acc[static_cast<std::size_t>(e.unit)];
            if (e.sign > 0)
                slot += term;
            else
                slot -= term;
        }
    }
    return HQuat(std::move(acc[0]), std::move(acc[1]), std::move(acc[2]), std::move(acc[3]));
}

HQuat hq_conj(const HQuat& a) { return HQuat(a[0], -a[1], -a[2], -a[3]); }

RingElement hq_norm_sq(const HQuat& a) { return a[0] * a[0] - a[1] * a[1] - a[2] * a[2] - a[3] * a[3]; }

std::pair<RingElement, HQuat> hq_scalar_vector(const HQuat& a)
{
    auto z = hypfib::zero_like(a[0]);
    return {a[0], HQuat(z, a[1], a[2], a[3])};
}

HQuat hq_specialize(const HQuat& a, const BigRational& at)
{
    return HQuat(specialize(a[0], at), specialize(a[1], at), specialize(a[2], at), specialize(a[3], at));
}

bool hq_value_equal(const HQuat& a, const HQuat& b)
{
    for (std::size_t i = 0; i < 4; ++i)
        if (!value_equal(a[i], b[i]))
            return false;
    return true;
}

HQuat hfib(SeqCache& cache, SeqIndex n)
{
    return HQuat(cache.fib(n), cache.fib(n + 1), cache.fib(n + 2), cache.fib(n + 3));
}

HQuat hlucas(SeqCache& cache, SeqIndex n)
{
    return HQuat(cache.lucas(n), cache.lucas(n + 1), cache.lucas(n + 2), cache.lucas(n + 3));
}

} // namespace hypfib
