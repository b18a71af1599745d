#ifndef BIONET_PARALLEL_HPP_
#define BIONET_PARALLEL_HPP_

#include <atomic>
#include <condition_variable>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace bionet {

/// Worker count: BIONET_THREADS if set and positive, else hardware concurrency.
inline unsigned worker_count() {
    if (const char* env = std::getenv("BIONET_THREADS")) {
        long v = std::strtol(env, nullptr, 10);
        if (v > 0) return static_cast<unsigned>(v);
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? hw : 1;
}

/// Runs `body(begin, end, worker)` over [0, n) split into fixed-size blocks
/// claimed dynamically by `workers` threads. Block boundaries depend only on
/// `block` so any order-sensitive reduction can key off the block index.
template <typename Body>
void parallel_blocks(std::size_t n, std::size_t block, Body&& body,
                     unsigned workers = worker_count()) {
    if (n == 0) return;
    const std::size_t nblocks = (n + block - 1) / block;
    if (workers <= 1 || nblocks == 1) {
        for (std::size_t b = 0; b < nblocks; ++b)
            body(b * block, std::min(n, (b + 1) * block), 0u);
        return;
    }
    std::atomic<std::size_t> next{0};
    auto run = [&](unsigned w) {
        for (;;) {
            std::size_t b = next.fetch_add(1);
            if (b >= nblocks) break;
            body(b * block, std::min(n, (b + 1) * block), w);
        }
    };
    std::vector<std::thread> pool;
    for (unsigned w = 1; w < workers; ++w) pool.emplace_back(run, w);
    run(0);
    for (auto& t : pool) t.join();
}

/// Ordered reduction companion for parallel_blocks: blocks are merged into the
/// global accumulator strictly in block-index order, so floating-point results
/// do not depend on thread count or scheduling.
class OrderedMerger {
public:
    /// Blocks until it is `block`'s turn, runs `merge`, then releases the next.
    template <typename Merge>
    void merge_in_order(std::size_t block, Merge&& merge) {
        std::unique_lock<std::mutex> lk(mu_);
        cv_.wait(lk, [&] { return turn_ == block; });
        merge();
        ++turn_;
        cv_.notify_all();
    }

private:
    std::mutex mu_;
    std::condition_variable cv_;
    std::size_t turn_ = 0;
};

}  // namespace bionet

#endif  // BIONET_PARALLEL_HPP_
