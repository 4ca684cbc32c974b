#pragma once

#include "hypfib/ring_element.hpp"

#include <cstddef>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace hypfib {

/// Which ring the sequence lives in: k as an indeterminate (PolyK values) or
/// k fixed to a rational constant c. Integer c gives Integer values, any other
/// c gives BigRational values.
class KMode {
public:
    static KMode symbolic();
    static KMode numeric(BigRational c);
    // "symbolic" or a rational literal.
    static KMode parse(std::string_view text);

    bool is_symbolic() const noexcept { return symbolic_; }
    // Only meaningful for numeric modes.
    const BigRational& value() const noexcept { return value_; }

    RingKind ring() const noexcept;
    RingElement k() const;
    RingElement from_int(long v) const;

    // Radicand k^2 + 4 used for Binet's quadratic extension in this mode.
    PolyK radicand() const;
    // k itself as a PolyK (the indeterminate, or a constant).
    PolyK k_poly() const;

    std::string label() const;

    friend bool operator==(const KMode&, const KMode&) = default;

private:
    KMode(bool symbolic, BigRational value) : symbolic_(symbolic), value_(std::move(value)) {}

    bool symbolic_ = true;
    BigRational value_;
};

using SeqIndex = std::int64_t;

/// Memoized k-Fibonacci / k-Lucas values for one KMode.
///
/// F is extended forward with F(n+1) = k F(n) + F(n-1) and backward with
/// F(n-1) = F(n+1) - k F(n). Lucas numbers are defined as
/// L(n) = F(n+1) + F(n-1), which forces L(0) = 2 and L(1) = k.
///
/// Single writer: lookups may extend the cache, so one cache per thread.
class SeqCache {
public:
    explicit SeqCache(KMode mode);

    const KMode& mode() const noexcept { return mode_; }
    const RingElement& k() const noexcept { return k_; }

    RingElement fib(SeqIndex n);
    RingElement lucas(SeqIndex n);

    // Lowest and highest indices currently materialized.
    SeqIndex lowest_cached() const noexcept { return -static_cast<SeqIndex>(neg_.size()); }
    SeqIndex highest_cached() const noexcept { return static_cast<SeqIndex>(pos_.size()) - 1; }

private:
    const RingElement& at(SeqIndex n) const;

    KMode mode_;
    RingElement k_;
    std::vector<RingElement> pos_; // F(0), F(1), ...
    std::vector<RingElement> neg_; // F(-1), F(-2), ...
    std::unordered_map<SeqIndex, RingElement> lucas_;
};

// Multiplication counts reported by the numeric kernels. `big_mults` counts
// products of two sequence-sized values; `scalar_mults` counts products by
// the constant k (or k^2 + 4).
struct KernelStats {
    std::size_t big_mults = 0;
    std::size_t scalar_mults = 0;
};

/// (F(n), F(n+1)) in O(log n) ring multiplications, numeric k only.
///
/// Walks the bits of n carrying (F(m), L(m)) with
///   F(2m) = F(m) L(m),  L(2m) = L(m)^2 - 2(-1)^m,
///   F(m+1) = (k F(m) + L(m)) / 2,  L(m+1) = ((k^2+4) F(m) + k L(m)) / 2,
/// i.e. two big multiplications per bit. Throws SymbolicKUnsupported for
/// the symbolic mode.
std::pair<RingElement, RingElement> fib_pair_doubling(const KMode& mode, std::uint64_t n,
                                                      KernelStats* stats = nullptr);

/// (F(n), F(n+1)) by running the recurrence forward in O(1) memory.
/// Works for every mode; numeric integer k takes a GMP in-place fast path.
std::pair<RingElement, RingElement> fib_pair_iterative(const KMode& mode, std::uint64_t n,
                                                       KernelStats* stats = nullptr);

// F(-n) = (-1)^(n+1) F(n), given f_n = F(n).
RingElement fib_negate_index(std::uint64_t n, const RingElement& f_n);

} // namespace hypfib
