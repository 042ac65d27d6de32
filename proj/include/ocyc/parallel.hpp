#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace ocyc {

/// Runs body(i, acc) for i in [0, count) split into contiguous blocks, one per worker,
/// then folds the per-worker accumulators into the first with merge(into, from).
/// Block boundaries depend only on (count, workers), and merge is expected to be
/// commutative, so the result does not depend on scheduling.
template <class Acc, class Body, class Merge>
Acc parallel_reduce(std::size_t count, unsigned workers, const Acc& init, Body body, Merge merge) {
    workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(std::max<std::size_t>(count, 1))));
    if (workers == 1) {
        Acc acc = init;
        for (std::size_t i = 0; i < count; ++i) body(i, acc);
        return acc;
    }
    std::vector<Acc> partial(workers, init);
    std::vector<std::exception_ptr> errors(workers);
    {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) {
            const std::size_t lo = count * w / workers, hi = count * (w + 1) / workers;
            pool.emplace_back([&, w, lo, hi] {
                try {
                    for (std::size_t i = lo; i < hi; ++i) body(i, partial[w]);
                } catch (...) {
                    errors[w] = std::current_exception();
                }
            });
        }
    }
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    for (unsigned w = 1; w < workers; ++w) merge(partial[0], std::move(partial[w]));
    return std::move(partial[0]);
}

}  // namespace ocyc
