#pragma once

#include "hypfib/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace hypfib {

/// Dense univariate polynomial in the indeterminate k with rational
/// coefficients.
///
/// coeffs()[i] is the coefficient of k^i. The highest stored coefficient is
/// always nonzero; the zero polynomial stores no coefficients at all, so two
/// polynomials are equal exactly when their coefficient vectors are.
class PolyK {
public:
    PolyK() = default;
    PolyK(long c);
    PolyK(const BigInt& c);
    PolyK(const BigRational& c);
    PolyK(std::initializer_list<BigRational> coeffs);
    explicit PolyK(std::vector<BigRational> coeffs);

    static PolyK k();
    static PolyK monomial(BigRational c, std::size_t degree);

    const std::vector<BigRational>& coeffs() const noexcept { return coeffs_; }

    bool is_zero() const noexcept { return coeffs_.empty(); }
    bool is_constant() const noexcept { return coeffs_.size() <= 1; }

    // -1 for the zero polynomial.
    long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }

    // Zero for indices past the degree.
    BigRational coeff(std::size_t i) const;
    BigRational leading() const;

    // True when every coefficient is an integer.
    bool is_integral() const;

    PolyK operator-() const;
    PolyK& operator+=(const PolyK& rhs);
    PolyK& operator-=(const PolyK& rhs);
    PolyK& operator*=(const PolyK& rhs);
    PolyK& operator*=(const BigRational& c);

    friend PolyK operator+(PolyK lhs, const PolyK& rhs) { return lhs += rhs; }
    friend PolyK operator-(PolyK lhs, const PolyK& rhs) { return lhs -= rhs; }
    friend PolyK operator*(const PolyK& lhs, const PolyK& rhs);
    friend PolyK operator*(PolyK lhs, const BigRational& c) { return lhs *= c; }
    friend PolyK operator*(const BigRational& c, PolyK rhs) { return rhs *= c; }

    friend bool operator==(const PolyK&, const PolyK&) = default;

    // Horner evaluation at k = x.
    BigRational eval(const BigRational& x) const;

    // Descending powers, '^' for exponents, no '*': "k^3 + 2k", "-k^2 + (1/2)k - 3".
    std::string to_string() const;

    // Inverse of to_string(); also accepts surrounding whitespace, "*" between
    // coefficient and k, and bare rational constants such as "7/2".
    static PolyK parse(std::string_view text);

private:
    void trim();

    std::vector<BigRational> coeffs_;
};

PolyK poly_add(const PolyK& p, const PolyK& q);
PolyK poly_mul(const PolyK& p, const PolyK& q);
BigRational poly_eval(const PolyK& p, const BigRational& x);

} // namespace hypfib
