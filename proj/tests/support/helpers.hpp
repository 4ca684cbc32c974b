#pragma once

#include "oracle.hpp"

#include <hypfib/hquat.hpp>
#include <hypfib/poly.hpp>

#include <random>

namespace testing {

inline hypfib::RingElement Z(long v) { return hypfib::RingElement(hypfib::BigInt(v)); }
inline hypfib::RingElement P(hypfib::PolyK p) { return hypfib::RingElement(std::move(p)); }

inline hypfib::HQuat int_quat(long a, long b, long c, long d) { return {Z(a), Z(b), Z(c), Z(d)}; }

inline hypfib::HQuat from_oracle(const oracle::Q4& q)
{
    using hypfib::RingElement;
    return {RingElement(q[0]), RingElement(q[1]), RingElement(q[2]), RingElement(q[3])};
}

inline hypfib::PolyK random_poly(std::mt19937_64& rng, int max_degree = 4)
{
    std::uniform_int_distribution<int> deg(-1, max_degree);
    std::uniform_int_distribution<long> num(-9, 9);
    std::uniform_int_distribution<long> den(1, 4);
    std::vector<hypfib::BigRational> c;
    for (int d = deg(rng); d >= 0; --d)
        c.push_back(hypfib::make_rational(num(rng), den(rng)));
    return hypfib::PolyK(std::move(c));
}

inline hypfib::HQuat random_quat(std::mt19937_64& rng, int max_degree = 4)
{
    return {P(random_poly(rng, max_degree)), P(random_poly(rng, max_degree)), P(random_poly(rng, max_degree)),
            P(random_poly(rng, max_degree))};
}

} // namespace testing
