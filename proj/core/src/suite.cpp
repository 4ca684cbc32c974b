#include "hypfib/errors.hpp"
#include "hypfib/identities.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <map>
#include <mutex>
#include <thread>

namespace hypfib {

namespace {

struct Task {
    IdentityId id;
    Params params;
    std::size_t mode;
};

void require_ordered(const IndexRange& r, std::string_view name)
{
    if (r.lo > r.hi)
        throw InvalidRange(fmt::format("range for {} is empty: {}..{}", name, r.lo, r.hi));
}

SeqIndex max_abs(const IndexRange& r) { return std::max(std::llabs(r.lo), std::llabs(r.hi)); }

std::vector<Params> params_for(IdentityId id, const SuiteGrid& grid)
{
    std::vector<Params> out;
    for (SeqIndex n = grid.n.lo; n <= grid.n.hi; ++n) {
        if (uses_m(id)) {
            for (SeqIndex m = grid.m.lo; m <= grid.m.hi; ++m)
                out.push_back({n, m, std::nullopt});
        } else if (uses_r(id)) {
            for (SeqIndex r = grid.r.lo; r <= grid.r.hi; ++r)
                out.push_back({n, std::nullopt, r});
        } else {
            out.push_back({n, std::nullopt, std::nullopt});
        }
    }
    return out;
}

} // namespace

std::vector<VerificationRecord> run_suite(std::span<const IdentityId> ids, const SuiteGrid& grid,
                                          std::span<const KMode> modes, unsigned jobs, ProductRule rule)
{
    require_ordered(grid.n, "n");
    require_ordered(grid.m, "m");
    require_ordered(grid.r, "r");
    if (jobs == 0)
        throw InvalidRange("jobs must be at least 1");

    std::vector<IdentityId> order(ids.begin(), ids.end());
    std::sort(order.begin(), order.end());
    order.erase(std::unique(order.begin(), order.end()), order.end());

    const bool any_symbolic = std::any_of(modes.begin(), modes.end(), [](const KMode& m) { return m.is_symbolic(); });
    if (any_symbolic) {
        SeqIndex second = 0;
        for (auto id : order) {
            if (uses_m(id))
                second = std::max(second, max_abs(grid.m));
            if (uses_r(id))
                second = std::max(second, max_abs(grid.r));
        }
        const SeqIndex reach = max_abs(grid.n) + second;
        if (!order.empty() && reach > symbolic_degree_cap)
            throw GridTooLarge(
                fmt::format("symbolic grid reaches n+m = {} (cap {})", reach, symbolic_degree_cap));
    }

    std::vector<Task> tasks;
    for (auto id : order)
        for (const auto& p : params_for(id, grid))
            for (std::size_t mi = 0; mi < modes.size(); ++mi)
                tasks.push_back({id, p, mi});

    std::vector<std::optional<VerificationRecord>> slots(tasks.size());
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;

    auto worker = [&] {
        // One cache per mode per worker.
        std::map<std::size_t, SeqCache> caches;
        try {
            for (std::size_t i = next++; i < tasks.size(); i = next++) {
                const auto& t = tasks[i];
                auto it = caches.find(t.mode);
                if (it == caches.end())
                    it = caches.emplace(t.mode, SeqCache(modes[t.mode])).first;
                slots[i] = check(t.id, it->second, t.params, rule);
            }
        } catch (...) {
            std::lock_guard lock(failure_mutex);
            if (!failure)
                failure = std::current_exception();
            next = tasks.size();
        }
    };

    const unsigned workers = std::min<std::size_t>(jobs, std::max<std::size_t>(tasks.size(), 1));
    if (workers <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w)
            pool.emplace_back(worker);
    }
    if (failure)
        std::rethrow_exception(failure);

    std::vector<VerificationRecord> out;
    out.reserve(slots.size());
    for (auto& s : slots)
        if (s)
            out.push_back(std::move(*s));
    return out;
}

} // namespace hypfib
