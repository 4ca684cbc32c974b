#pragma once

#include "hypfib/poly.hpp"
#include "hypfib/quad_ext.hpp"
#include "hypfib/rational.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <variant>

namespace hypfib {

// Ordered by the promotion chain Integer -> Rational -> Poly -> Quad.
enum class RingKind { Integer = 0, Rational = 1, Poly = 2, Quad = 3 };

std::string_view to_string(RingKind kind);

/// An exact value in one of the four coefficient rings.
///
/// Arithmetic requires both operands in the same ring (and, for Quad, the
/// same radicand); mixing rings throws RingMismatch. Crossing rings is only
/// possible through promote() / demote().
class RingElement {
public:
    using Storage = std::variant<BigInt, BigRational, PolyK, QuadExt>;

    RingElement() : v_(BigInt(0)) {}
    RingElement(BigInt z) : v_(std::move(z)) {}
    RingElement(BigRational q) : v_(std::move(q)) {}
    RingElement(PolyK p) : v_(std::move(p)) {}
    RingElement(QuadExt u) : v_(std::move(u)) {}

    RingKind kind() const noexcept { return static_cast<RingKind>(v_.index()); }
    const Storage& storage() const noexcept { return v_; }

    template <class T>
    const T& as() const
    {
        return std::get<T>(v_);
    }

    bool is_zero() const;

    RingElement operator-() const;
    RingElement& operator+=(const RingElement& rhs);
    RingElement& operator-=(const RingElement& rhs);
    RingElement& operator*=(const RingElement& rhs);

    friend RingElement operator+(RingElement a, const RingElement& b) { return a += b; }
    friend RingElement operator-(RingElement a, const RingElement& b) { return a -= b; }
    friend RingElement operator*(RingElement a, const RingElement& b) { return a *= b; }

    // Structural equality; values in different rings compare unequal.
    friend bool operator==(const RingElement&, const RingElement&) = default;

    std::string to_string() const;

private:
    Storage v_;
};

// Embeds x into `target`. Quad targets take `radicand` for the new value.
// Throws RingMismatch when target is below x's ring.
RingElement promote(const RingElement& x, RingKind target,
                    const PolyK& radicand = QuadExt::default_radicand());

// Inverse of promote where one exists: a rational with denominator 1, a
// constant polynomial, a quadratic value with zero surd part.
std::optional<RingElement> demote(const RingElement& x, RingKind target);

// The integer v in the same ring as `like` (same radicand for Quad).
RingElement lift_int(long v, const RingElement& like);
RingElement zero_like(const RingElement& like);
RingElement one_like(const RingElement& like);

// Substitutes k = x. Integer and Rational values are returned unchanged,
// Poly becomes Rational, Quad stays Quad with constant parts.
RingElement specialize(const RingElement& x, const BigRational& at);

// Equality after promoting both sides to the larger of their two rings.
bool value_equal(const RingElement& a, const RingElement& b);

} // namespace hypfib
