#pragma once

#include <cstdint>
#include <random>
#include <span>

namespace acym {

// Stable 64-bit mixer, used to derive independent per-sample seeds so that
// serial and parallel sweeps see identical random streams.
constexpr std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Uniform draw in [0, n). std::uniform_int_distribution is not pinned down by
// the standard, so seeded results would not be reproducible across library
// versions; this is.
std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t n);

// Uniform draw in [lo, hi], inclusive.
std::int64_t bounded_range(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi);

template <typename T>
void shuffle_span(std::span<T> items, std::mt19937_64& rng) {
  for (std::size_t i = items.size(); i > 1; --i) {
    std::size_t j = static_cast<std::size_t>(bounded(rng, i));
    std::swap(items[i - 1], items[j]);
  }
}

}  // namespace acym
