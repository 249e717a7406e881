#include "acym/pairview.hpp"

#include <algorithm>
#include <stdexcept>

namespace acym {

PairView make_pair_view(const SetPair& pair, const Operator& op,
                        std::vector<Element>* sum_values) {
  const int k = static_cast<int>(pair.a.size());
  std::vector<Element> sums;
  sums.reserve(static_cast<std::size_t>(k) * k);
  for (const Element& x : pair.a.items())
    for (const Element& y : pair.b.items()) sums.push_back(op.apply(x, y));

  std::vector<Element> distinct = sums;
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());

  PairView view;
  view.k = k;
  view.num_sums = static_cast<int>(distinct.size());
  view.sum_id.resize(static_cast<std::size_t>(k) * k);
  for (std::size_t idx = 0; idx < sums.size(); ++idx) {
    const auto it = std::lower_bound(distinct.begin(), distinct.end(), sums[idx]);
    view.sum_id[idx] = static_cast<int>(it - distinct.begin());
  }
  view.sum_in_a.resize(distinct.size());
  for (std::size_t s = 0; s < distinct.size(); ++s)
    view.sum_in_a[s] = pair.a.contains(distinct[s]) ? 1 : 0;
  if (sum_values != nullptr) *sum_values = std::move(distinct);
  return view;
}

PairView make_pair_view_dense(std::span<const int> table, int n,
                              std::span<const int> a, std::span<const int> b,
                              std::vector<int>* sum_carrier) {
  if (a.size() != b.size())
    throw std::invalid_argument("pair view: |A| must equal |B|");
  const int k = static_cast<int>(a.size());

  std::vector<int> sums(static_cast<std::size_t>(k) * k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      sums[static_cast<std::size_t>(i) * k + j] =
          table[static_cast<std::size_t>(a[i]) * n + b[j]];

  std::vector<int> distinct = sums;
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());

  PairView view;
  view.k = k;
  view.num_sums = static_cast<int>(distinct.size());
  view.sum_id.resize(sums.size());
  for (std::size_t idx = 0; idx < sums.size(); ++idx) {
    const auto it = std::lower_bound(distinct.begin(), distinct.end(), sums[idx]);
    view.sum_id[idx] = static_cast<int>(it - distinct.begin());
  }
  view.sum_in_a.resize(distinct.size());
  for (std::size_t s = 0; s < distinct.size(); ++s)
    view.sum_in_a[s] =
        std::binary_search(a.begin(), a.end(), distinct[s]) ? 1 : 0;
  if (sum_carrier != nullptr) *sum_carrier = std::move(distinct);
  return view;
}

}  // namespace acym
