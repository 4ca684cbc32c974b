#include "hypfib/kfib.hpp"

#include "hypfib/errors.hpp"

#include <bit>
#include <stdexcept>

namespace hypfib {

// ---- KMode ----------------------------------------------------------------

KMode KMode::symbolic() { return KMode(true, BigRational(0)); }

KMode KMode::numeric(BigRational c)
{
    c.canonicalize();
    return KMode(false, std::move(c));
}

KMode KMode::parse(std::string_view text)
{
    if (text == "symbolic" || text == "k")
        return symbolic();
    return numeric(parse_rational(text));
}

RingKind KMode::ring() const noexcept
{
    if (symbolic_)
        return RingKind::Poly;
    return is_integer(value_) ? RingKind::Integer : RingKind::Rational;
}

RingElement KMode::k() const
{
    switch (ring()) {
    case RingKind::Poly: return RingElement(PolyK::k());
    case RingKind::Integer: return RingElement(BigInt(value_.get_num()));
    default: return RingElement(value_);
    }
}

RingElement KMode::from_int(long v) const { return promote(RingElement(BigInt(v)), ring()); }

PolyK KMode::k_poly() const { return symbolic_ ? PolyK::k() : PolyK(value_); }

PolyK KMode::radicand() const
{
    if (symbolic_)
        return QuadExt::default_radicand();
    return PolyK(BigRational(value_ * value_ + 4));
}

std::string KMode::label() const { return symbolic_ ? "symbolic" : to_string(value_); }

// ---- SeqCache -------------------------------------------------------------

SeqCache::SeqCache(KMode mode) : mode_(std::move(mode)), k_(mode_.k())
{
    pos_.push_back(mode_.from_int(0));
    pos_.push_back(mode_.from_int(1));
}

const RingElement& SeqCache::at(SeqIndex n) const
{
    return n >= 0 ? pos_[static_cast<std::size_t>(n)] : neg_[static_cast<std::size_t>(-n - 1)];
}

RingElement SeqCache::fib(SeqIndex n)
{
    if (n >= 0) {
        while (highest_cached() < n) {
            const auto top = highest_cached();
            pos_.push_back(k_ * at(top) + at(top - 1));
        }
    } else {
        while (lowest_cached() > n) {
            const auto low = lowest_cached();
            neg_.push_back(at(low + 1) - k_ * at(low));
        }
    }
    return at(n);
}

RingElement SeqCache::lucas(SeqIndex n)
{
    if (auto it = lucas_.find(n); it != lucas_.end())
        return it->second;
    auto value = fib(n + 1) + fib(n - 1);
    lucas_.emplace(n, value);
    return value;
}

// ---- numeric kernels -------------------------------------------------------

namespace {

RingElement half(const RingElement& x)
{
    switch (x.kind()) {
    case RingKind::Integer: {
        const auto& z = x.as<BigInt>();
        if (mpz_odd_p(z.get_mpz_t()))
            throw std::logic_error("halving an odd integer in the doubling kernel");
        BigInt h;
        mpz_divexact_ui(h.get_mpz_t(), z.get_mpz_t(), 2);
        return RingElement(std::move(h));
    }
    case RingKind::Rational: return RingElement(BigRational(x.as<BigRational>() / 2));
    default: throw std::logic_error("doubling kernel on a non-numeric ring");
    }
}

} // namespace

std::pair<RingElement, RingElement> fib_pair_doubling(const KMode& mode, std::uint64_t n, KernelStats* stats)
{
    if (mode.is_symbolic())
        throw SymbolicKUnsupported("fib_pair_doubling needs a numeric k");

    KernelStats local;
    const RingElement k = mode.k();
    const RingElement disc = k * k + mode.from_int(4);
    const RingElement two = mode.from_int(2);

    RingElement f = mode.from_int(0);
    RingElement l = two;
    std::uint64_t m = 0;

    for (int bit = std::bit_width(n) - 1; bit >= 0; --bit) {
        if (m != 0) {
            RingElement f2 = f * l;
            RingElement l2 = l * l;
            local.big_mults += 2;
            // (-1)^m
            if (m % 2 == 0)
                l2 -= two;
            else
                l2 += two;
            f = std::move(f2);
            l = std::move(l2);
            m *= 2;
        }
        if ((n >> bit) & 1U) {
            RingElement f1 = half(k * f + l);
            RingElement l1 = half(disc * f + k * l);
            local.scalar_mults += 3;
            f = std::move(f1);
            l = std::move(l1);
            m += 1;
        }
    }

    RingElement next = half(k * f + l);
    local.scalar_mults += 1;
    if (stats)
        *stats = local;
    return {std::move(f), std::move(next)};
}

std::pair<RingElement, RingElement> fib_pair_iterative(const KMode& mode, std::uint64_t n, KernelStats* stats)
{
    KernelStats local;
    local.scalar_mults = n;

    if (mode.ring() == RingKind::Integer) {
        const BigInt kz = mode.value().get_num();
        const bool unit = kz == 1;
        BigInt prev = 0;
        BigInt cur = 1;
        for (std::uint64_t i = 0; i < n; ++i) {
            // prev <- k*cur + prev, then rotate so cur holds the newest term
            if (unit)
                mpz_add(prev.get_mpz_t(), prev.get_mpz_t(), cur.get_mpz_t());
            else
                mpz_addmul(prev.get_mpz_t(), cur.get_mpz_t(), kz.get_mpz_t());
            mpz_swap(prev.get_mpz_t(), cur.get_mpz_t());
        }
        if (stats)
            *stats = local;
        return {RingElement(std::move(prev)), RingElement(std::move(cur))};
    }

    const RingElement k = mode.k();
    RingElement prev = mode.from_int(0);
    RingElement cur = mode.from_int(1);
    for (std::uint64_t i = 0; i < n; ++i) {
        RingElement next = k * cur + prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    if (stats)
        *stats = local;
    return {std::move(prev), std::move(cur)};
}

RingElement fib_negate_index(std::uint64_t n, const RingElement& f_n) { return n % 2 == 1 ? f_n : -f_n; }

} // namespace hypfib
