#include "hypfib/poly.hpp"

#include "hypfib/errors.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cctype>
#include <string>
#include <utility>

namespace hypfib {

// ---- rationals ------------------------------------------------------------

BigRational make_rational(const BigInt& num, const BigInt& den)
{
    if (den == 0)
        throw ParseError("zero denominator");
    BigRational q(num, den);
    q.canonicalize();
    return q;
}

namespace {

bool all_digits(std::string_view s)
{
    return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

std::string_view strip(std::string_view s)
{
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);
    return s;
}

} // namespace

BigRational parse_rational(std::string_view text)
{
    auto s = strip(text);
    bool negative = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    auto slash = s.find('/');
    auto num_text = s.substr(0, slash);
    auto den_text = slash == std::string_view::npos ? std::string_view("1") : s.substr(slash + 1);
    if (!all_digits(num_text) || !all_digits(den_text))
        throw ParseError(fmt::format("not a rational literal: '{}'", text));
    BigInt num(std::string(num_text), 10);
    BigInt den(std::string(den_text), 10);
    if (negative)
        num = -num;
    return make_rational(num, den);
}

bool is_integer(const BigRational& q) { return q.get_den() == 1; }

std::string to_string(const BigInt& z) { return z.get_str(10); }

std::string to_string(const BigRational& q)
{
    if (is_integer(q))
        return q.get_num().get_str(10);
    return q.get_num().get_str(10) + "/" + q.get_den().get_str(10);
}

// ---- PolyK ----------------------------------------------------------------

PolyK::PolyK(long c) : PolyK(BigRational(c)) {}

PolyK::PolyK(const BigInt& c) : PolyK(BigRational(c)) {}

PolyK::PolyK(const BigRational& c)
{
    if (c != 0)
        coeffs_.push_back(c);
}

PolyK::PolyK(std::initializer_list<BigRational> coeffs) : coeffs_(coeffs) { trim(); }

PolyK::PolyK(std::vector<BigRational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

PolyK PolyK::k() { return monomial(1, 1); }

PolyK PolyK::monomial(BigRational c, std::size_t degree)
{
    if (c == 0)
        return {};
    std::vector<BigRational> v(degree + 1);
    v[degree] = std::move(c);
    return PolyK(std::move(v));
}

BigRational PolyK::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : BigRational(0); }

BigRational PolyK::leading() const { return coeffs_.empty() ? BigRational(0) : coeffs_.back(); }

bool PolyK::is_integral() const
{
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const BigRational& c) { return is_integer(c); });
}

void PolyK::trim()
{
    while (!coeffs_.empty() && coeffs_.back() == 0)
        coeffs_.pop_back();
}

PolyK PolyK::operator-() const
{
    PolyK r = *this;
    for (auto& c : r.coeffs_)
        c = -c;
    return r;
}

PolyK& PolyK::operator+=(const PolyK& rhs)
{
    if (rhs.coeffs_.size() > coeffs_.size())
        coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i)
        coeffs_[i] += rhs.coeffs_[i];
    trim();
    return *this;
}

PolyK& PolyK::operator-=(const PolyK& rhs)
{
    if (rhs.coeffs_.size() > coeffs_.size())
        coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i)
        coeffs_[i] -= rhs.coeffs_[i];
    trim();
    return *this;
}

PolyK operator*(const PolyK& lhs, const PolyK& rhs)
{
    if (lhs.is_zero() || rhs.is_zero())
        return {};
    std::vector<BigRational> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1);
    BigRational t;
    for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
        if (lhs.coeffs_[i] == 0)
            continue;
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
            mpq_mul(t.get_mpq_t(), lhs.coeffs_[i].get_mpq_t(), rhs.coeffs_[j].get_mpq_t());
            out[i + j] += t;
        }
    }
    // Leading product is nonzero over Q, so no trim is needed; kept for the
    // invariant's sake.
    return PolyK(std::move(out));
}

PolyK& PolyK::operator*=(const PolyK& rhs) { return *this = *this * rhs; }

PolyK& PolyK::operator*=(const BigRational& c)
{
    if (c == 0) {
        coeffs_.clear();
        return *this;
    }
    for (auto& x : coeffs_)
        x *= c;
    return *this;
}

BigRational PolyK::eval(const BigRational& x) const
{
    BigRational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc *= x;
        acc += *it;
    }
    return acc;
}

std::string PolyK::to_string() const
{
    if (coeffs_.empty())
        return "0";
    std::string out;
    bool first = true;
    for (std::size_t idx = coeffs_.size(); idx-- > 0;) {
        const auto& c = coeffs_[idx];
        if (c == 0)
            continue;
        const bool negative = c < 0;
        if (first)
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        first = false;

        BigRational mag = abs(c);
        if (idx == 0) {
            out += hypfib::to_string(mag);
            continue;
        }
        if (mag != 1)
            out += is_integer(mag) ? hypfib::to_string(mag) : "(" + hypfib::to_string(mag) + ")";
        out += 'k';
        if (idx > 1)
            out += fmt::format("^{}", idx);
    }
    return out;
}

namespace {

// Recursive-descent reader over a whitespace-free copy of the input.
class PolyReader {
public:
    explicit PolyReader(std::string text, std::string_view original)
        : s_(std::move(text)), original_(original)
    {
    }

    PolyK read()
    {
        if (s_.empty())
            fail("empty polynomial");
        PolyK acc;
        bool first = true;
        while (pos_ < s_.size()) {
            int sign = 1;
            if (peek() == '+' || peek() == '-') {
                sign = peek() == '-' ? -1 : 1;
                ++pos_;
            } else if (!first) {
                fail("expected '+' or '-'");
            }
            first = false;
            acc += read_term() * BigRational(sign);
        }
        return acc;
    }

private:
    char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }

    [[noreturn]] void fail(std::string_view why) const
    {
        throw ParseError(fmt::format("bad polynomial '{}': {} at offset {}", original_, why, pos_));
    }

    std::string digits()
    {
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
        return s_.substr(start, pos_ - start);
    }

    BigRational read_plain_rational()
    {
        auto num = digits();
        if (num.empty())
            fail("expected digits");
        std::string den = "1";
        if (peek() == '/') {
            ++pos_;
            den = digits();
            if (den.empty())
                fail("expected denominator");
        }
        return make_rational(BigInt(num, 10), BigInt(den, 10));
    }

    PolyK read_term()
    {
        BigRational coef = 1;
        bool have_coef = false;
        if (peek() == '(') {
            ++pos_;
            int sign = 1;
            if (peek() == '-' || peek() == '+') {
                sign = peek() == '-' ? -1 : 1;
                ++pos_;
            }
            coef = read_plain_rational() * sign;
            if (peek() != ')')
                fail("expected ')'");
            ++pos_;
            have_coef = true;
        } else if (std::isdigit(static_cast<unsigned char>(peek()))) {
            coef = read_plain_rational();
            have_coef = true;
        }
        if (have_coef && peek() == '*')
            ++pos_;
        if (peek() != 'k') {
            if (!have_coef)
                fail("expected coefficient or 'k'");
            return PolyK(coef);
        }
        ++pos_;
        std::size_t degree = 1;
        if (peek() == '^') {
            ++pos_;
            auto d = digits();
            if (d.empty())
                fail("expected exponent");
            degree = std::stoul(d);
        }
        return PolyK::monomial(coef, degree);
    }

    std::string s_;
    std::string_view original_;
    std::size_t pos_ = 0;
};

} // namespace

PolyK PolyK::parse(std::string_view text)
{
    std::string compact;
    compact.reserve(text.size());
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c)))
            compact += c;
    return PolyReader(std::move(compact), text).read();
}

PolyK poly_add(const PolyK& p, const PolyK& q) { return p + q; }
PolyK poly_mul(const PolyK& p, const PolyK& q) { return p * q; }
BigRational poly_eval(const PolyK& p, const BigRational& x) { return p.eval(x); }

} // namespace hypfib
