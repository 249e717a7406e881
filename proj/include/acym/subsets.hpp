#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace acym {

// Binomial coefficient, saturating at UINT64_MAX instead of overflowing.
std::uint64_t binomial(int n, int k);

// k-subsets of {0,...,n-1} ordered lexicographically by their sorted index
// vectors; rank 0 is {0,1,...,k-1}. This is the rank order every exhaustive
// sweep iterates in, so witness ranks are stable.
std::vector<int> unrank_subset(int n, int k, std::uint64_t rank);
void unrank_subset_into(int n, int k, std::uint64_t rank, std::span<int> out);
std::uint64_t rank_subset(int n, std::span<const int> subset);

// In-place lexicographic successor; returns false after the last subset.
bool next_subset(int n, std::span<int> subset);

}  // namespace acym
