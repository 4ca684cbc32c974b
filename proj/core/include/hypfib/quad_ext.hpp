#pragma once

#include "hypfib/poly.hpp"

#include <string>

namespace hypfib {

/// rat + surd * s, where s is adjoined formally with s^2 = radicand.
///
/// The radicand defaults to k^2 + 4, which makes s the square root
/// sqrt(k^2 + 4) = alpha - beta of the k-Fibonacci characteristic polynomial
/// t^2 - k t - 1. Numeric-k sessions specialize it to the constant c^2 + 4.
/// Values with different radicands live in different rings and never mix.
class QuadExt {
public:
    QuadExt() : QuadExt(PolyK{}) {}
    explicit QuadExt(PolyK rat, PolyK surd = {}, PolyK radicand = default_radicand());

    static const PolyK& default_radicand();

    // alpha = (k + s)/2 and beta = (k - s)/2 over the given k and radicand.
    static QuadExt alpha(const PolyK& k, const PolyK& radicand);
    static QuadExt beta(const PolyK& k, const PolyK& radicand);

    const PolyK& rat_part() const noexcept { return rat_; }
    const PolyK& surd_part() const noexcept { return surd_; }
    const PolyK& radicand() const noexcept { return radicand_; }

    bool is_zero() const noexcept { return rat_.is_zero() && surd_.is_zero(); }
    bool is_pure_surd() const noexcept { return rat_.is_zero(); }

    QuadExt operator-() const;
    QuadExt& operator+=(const QuadExt& rhs);
    QuadExt& operator-=(const QuadExt& rhs);
    QuadExt& operator*=(const QuadExt& rhs);

    friend QuadExt operator+(QuadExt a, const QuadExt& b) { return a += b; }
    friend QuadExt operator-(QuadExt a, const QuadExt& b) { return a -= b; }
    friend QuadExt operator*(QuadExt a, const QuadExt& b) { return a *= b; }

    friend bool operator==(const QuadExt&, const QuadExt&) = default;

    // Coefficients evaluated at k = x; the result keeps s formal with the
    // radicand evaluated as well.
    QuadExt eval(const BigRational& x) const;

    // "(rat) + (surd) sqrt(radicand)"; a zero part is omitted.
    std::string to_string() const;

private:
    void require_same_ring(const QuadExt& rhs) const;

    PolyK rat_;
    PolyK surd_;
    PolyK radicand_;
};

QuadExt quad_mul(const QuadExt& u, const QuadExt& v);

// Coefficient of s. Throws NonPureSurd if the rational part is nonzero.
PolyK quad_extract_surd(const QuadExt& u);

} // namespace hypfib
