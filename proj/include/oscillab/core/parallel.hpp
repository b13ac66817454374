#pragma once

#include <algorithm>
#include <atomic>
#include <complex>
#include <cstddef>
#include <exception>
#include <mutex>
#include <span>
#include <thread>
#include <vector>

namespace oscillab {

struct ExecPolicy {
    unsigned threads = 1;
};

inline constexpr std::size_t kReductionBlock = std::size_t{1} << 14;

/// Pairwise sum with a shape that depends only on values.size().
template <typename T>
T pairwise_sum(std::span<const T> values) {
    if (values.size() <= 8) {
        T acc{};
        for (const auto& v : values) acc += v;
        return acc;
    }
    const std::size_t half = values.size() / 2;
    return pairwise_sum(values.first(half)) + pairwise_sum(values.subspan(half));
}

/// Runs body(block) for block = 0..blocks-1 on up to `threads` workers.
/// Exceptions are rethrown on the calling thread.
template <typename Body>
void for_each_block(std::size_t blocks, unsigned threads, Body&& body) {
    const unsigned workers = static_cast<unsigned>(std::min<std::size_t>(std::max(1u, threads), blocks));
    if (workers <= 1) {
        for (std::size_t b = 0; b < blocks; ++b) body(b);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back([&] {
                try {
                    for (std::size_t b = next++; b < blocks; b = next++) body(b);
                } catch (...) {
                    std::lock_guard lock(error_mutex);
                    if (!error) error = std::current_exception();
                    next = blocks;
                }
            });
        }
    }
    if (error) std::rethrow_exception(error);
}

/// Sum of term(i) over i in [0, count). The index range is cut into fixed
/// kReductionBlock-sized blocks, each block is summed pairwise, and the block
/// partials are combined pairwise in index order, so the result is bitwise
/// independent of the thread count.
template <typename T, typename Term>
T deterministic_sum(std::size_t count, const ExecPolicy& policy, Term&& term) {
    if (count == 0) return T{};
    const std::size_t blocks = (count + kReductionBlock - 1) / kReductionBlock;
    std::vector<T> partials(blocks);
    for_each_block(blocks, policy.threads, [&](std::size_t b) {
        const std::size_t lo = b * kReductionBlock;
        const std::size_t hi = std::min(count, lo + kReductionBlock);
        std::vector<T> local(hi - lo);
        for (std::size_t i = lo; i < hi; ++i) local[i - lo] = term(i);
        partials[b] = pairwise_sum(std::span<const T>(local));
    });
    return pairwise_sum(std::span<const T>(partials));
}

}  // namespace oscillab
