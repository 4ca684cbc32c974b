#pragma once

#include "hypfib/kfib.hpp"
#include "hypfib/ring_element.hpp"

#include <array>
#include <cstddef>
#include <string>
#include <utility>

namespace hypfib {

/// Basis units of the hyperbolic quaternions. The third unit is called e3
/// here to keep it apart from the sequence parameter k; it still renders as
/// "k" in reports.
enum class Unit : std::size_t { one = 0, i = 1, j = 2, e3 = 3 };

/// Signed product table of the units:
///   i^2 = j^2 = e3^2 = 1,  ij = e3 = -ji,  j e3 = i = -e3 j,  e3 i = j = -i e3.
struct UnitTable {
    struct Entry {
        int sign;
        Unit unit;
    };

    static constexpr Entry product(Unit a, Unit b) noexcept
    {
        return table[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
    }

    static constexpr std::array<std::array<Entry, 4>, 4> table{{
        {{{1, Unit::one}, {1, Unit::i}, {1, Unit::j}, {1, Unit::e3}}},
        {{{1, Unit::i}, {1, Unit::one}, {1, Unit::e3}, {-1, Unit::j}}},
        {{{1, Unit::j}, {-1, Unit::e3}, {1, Unit::one}, {1, Unit::i}}},
        {{{1, Unit::e3}, {1, Unit::j}, {-1, Unit::i}, {1, Unit::one}}},
    }};
};

/// q0 + q1 i + q2 j + q3 e3 with all four components in one ring.
///
/// The product is bilinear but neither commutative nor associative, and there
/// is no inverse: the pseudo-norm q0^2 - q1^2 - q2^2 - q3^2 can vanish.
class HQuat {
public:
    // Zero quaternion in the Integer ring.
    HQuat();
    // Throws RingMismatch if the components are not all in the same ring.
    HQuat(RingElement q0, RingElement q1, RingElement q2, RingElement q3);

    static HQuat scalar(RingElement c);
    static HQuat zero_like(const RingElement& like);
    // The basis unit u with coefficients in like's ring.
    static HQuat unit(Unit u, const RingElement& like);

    const RingElement& operator[](std::size_t i) const { return c_[i]; }
    const std::array<RingElement, 4>& components() const noexcept { return c_; }
    RingKind ring() const noexcept { return c_[0].kind(); }

    bool is_zero() const;
    bool vector_is_zero() const;

    HQuat operator-() const;
    HQuat& operator+=(const HQuat& rhs);
    HQuat& operator-=(const HQuat& rhs);

    friend HQuat operator+(HQuat a, const HQuat& b) { return a += b; }
    friend HQuat operator-(HQuat a, const HQuat& b) { return a -= b; }
    // Quaternion product; same as hq_mul.
    friend HQuat operator*(const HQuat& a, const HQuat& b);
    // Scaling by a ring element (central, so the side does not matter).
    friend HQuat operator*(const RingElement& c, const HQuat& a);

    friend bool operator==(const HQuat&, const HQuat&) = default;

    // "(q0) + (q1) i + (q2) j + (q3) k"
    std::string to_string() const;

private:
    std::array<RingElement, 4> c_;
};

HQuat hq_add(const HQuat& a, const HQuat& b);
HQuat hq_sub(const HQuat& a, const HQuat& b);

// Component formulas written out term by term.
HQuat hq_mul(const HQuat& a, const HQuat& b);
// Same product computed by bilinear expansion over UnitTable.
HQuat hq_mul_table(const HQuat& a, const HQuat& b);

HQuat hq_conj(const HQuat& a);
// q0^2 - q1^2 - q2^2 - q3^2
RingElement hq_norm_sq(const HQuat& a);
// (q0, 0 + q1 i + q2 j + q3 k)
std::pair<RingElement, HQuat> hq_scalar_vector(const HQuat& a);

HQuat hq_specialize(const HQuat& a, const BigRational& at);
bool hq_value_equal(const HQuat& a, const HQuat& b);

// (F(n), F(n+1), F(n+2), F(n+3))
HQuat hfib(SeqCache& cache, SeqIndex n);
// (L(n), L(n+1), L(n+2), L(n+3))
HQuat hlucas(SeqCache& cache, SeqIndex n);

} // namespace hypfib
