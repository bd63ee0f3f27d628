#pragma once

#include <cstdint>
#include <functional>

namespace dlab {

/// SplitMix64 finalizer. All randomness in the project is counter-based:
/// a stream value is a pure function of (seed, index...), so results do
/// not depend on worker count or chunking.
inline std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline std::uint64_t mix64(std::uint64_t a, std::uint64_t b) {
    return mix64(mix64(a) ^ b);
}

inline std::uint64_t mix64(std::uint64_t a, std::uint64_t b, std::uint64_t c) {
    return mix64(mix64(a, b) ^ c);
}

/// Uniform double in [0,1) from a 64-bit word.
inline double to_unit(std::uint64_t x) {
    return static_cast<double>(x >> 11) * 0x1.0p-53;
}

inline double uniform01(std::uint64_t seed, std::uint64_t i) {
    return to_unit(mix64(seed, i));
}

inline double uniform01(std::uint64_t seed, std::uint64_t i, std::uint64_t j) {
    return to_unit(mix64(seed, i, j));
}

/// Worker count: DLAB_THREADS if set and positive, otherwise all cores.
std::size_t thread_count();

/// Runs body(begin, end) over a partition of [0, n). Each index must be
/// processed independently (typically filling slot i of a preallocated
/// array); any final reduction is done serially by the caller so the
/// result is identical for every thread count.
void parallel_for(std::size_t n, const std::function<void(std::size_t, std::size_t)>& body);

}  // namespace dlab
