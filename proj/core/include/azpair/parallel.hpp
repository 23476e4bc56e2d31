#ifndef AZPAIR_PARALLEL_HPP
#define AZPAIR_PARALLEL_HPP

/// Minimal deterministic parallel helpers. Work is partitioned by index,
/// results land in caller-owned slots, so the outcome never depends on
/// the number of worker threads. AZPAIR_THREADS caps the pool size.

#include <cstdint>
#include <functional>

namespace azpair {

/// Worker count: min(hardware_concurrency, AZPAIR_THREADS if set), >= 1.
unsigned thread_count();

/// Runs fn(i) for i in [0, n); serial when the pool size is 1.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

/// SplitMix64 step; used to derive independent per-chain/per-solve seeds
/// from the single user seed.
constexpr std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

}  // namespace azpair

#endif
