#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <random>

namespace bohr {

// Worker count for parallel sweeps; 0 means std::thread::hardware_concurrency.
void set_thread_count(unsigned threads);
unsigned thread_count();

// Runs body(i) for i in [0, n). Each index is processed exactly once; the
// first exception thrown by any worker is rethrown after all workers join.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

// Generator for one sweep cell. Depends only on (seed, a, b), so serial and
// parallel runs draw identical streams.
std::mt19937_64 cell_rng(std::uint64_t seed, std::uint64_t a, std::uint64_t b);

}  // namespace bohr
