#include "acym/subsets.hpp"

#include <limits>
#include <stdexcept>

namespace acym {

namespace {
constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
}

std::uint64_t binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  unsigned __int128 result = 1;
  for (int i = 1; i <= k; ++i) {
    // Partial products are C(n-k+i, i), so they only grow; saturating early
    // is safe.
    result = result * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);
    if (result > kMax) return kMax;
  }
  return static_cast<std::uint64_t>(result);
}

void unrank_subset_into(int n, int k, std::uint64_t rank, std::span<int> out) {
  if (static_cast<int>(out.size()) != k)
    throw std::invalid_argument("unrank_subset_into: output size mismatch");
  int x = 0;
  for (int i = 0; i < k; ++i) {
    for (;;) {
      const std::uint64_t with_x = binomial(n - 1 - x, k - 1 - i);
      if (rank < with_x) break;
      rank -= with_x;
      ++x;
      if (x >= n) throw std::out_of_range("unrank_subset: rank out of range");
    }
    out[i] = x++;
  }
}

std::vector<int> unrank_subset(int n, int k, std::uint64_t rank) {
  std::vector<int> out(static_cast<std::size_t>(k));
  unrank_subset_into(n, k, rank, out);
  return out;
}

std::uint64_t rank_subset(int n, std::span<const int> subset) {
  const int k = static_cast<int>(subset.size());
  std::uint64_t rank = 0;
  int prev = -1;
  for (int i = 0; i < k; ++i) {
    for (int v = prev + 1; v < subset[i]; ++v)
      rank += binomial(n - 1 - v, k - 1 - i);
    prev = subset[i];
  }
  return rank;
}

bool next_subset(int n, std::span<int> subset) {
  const int k = static_cast<int>(subset.size());
  int i = k - 1;
  while (i >= 0 && subset[i] == n - k + i) --i;
  if (i < 0) return false;
  ++subset[i];
  for (int j = i + 1; j < k; ++j) subset[j] = subset[j - 1] + 1;
  return true;
}

}  // namespace acym
