#include "acym/census.hpp"

#include <algorithm>
#include <map>

namespace acym {

namespace {

// Depth-first enumeration of bijections a-index -> b-index, maintaining the
// multiplicity count vector incrementally. Visit is called at each leaf.
template <typename Visit>
void enumerate_perms(const PairView& view, bool matchings_only, Visit&& visit) {
  const int k = view.k;
  std::vector<int> perm(static_cast<std::size_t>(k), -1);
  std::vector<std::uint8_t> used(static_cast<std::size_t>(k), 0);
  std::vector<int> counts(static_cast<std::size_t>(view.num_sums), 0);

  auto dfs = [&](auto&& self, int i) -> void {
    if (i == k) {
      visit(std::span<const int>(perm), std::span<const int>(counts));
      return;
    }
    for (int j = 0; j < k; ++j) {
      if (used[j]) continue;
      const int s = view.sum_at(i, j);
      if (matchings_only && view.sum_in_a[s]) continue;
      used[j] = 1;
      perm[i] = j;
      ++counts[s];
      self(self, i + 1);
      --counts[s];
      used[j] = 0;
    }
  };
  dfs(dfs, 0);
}

std::vector<int> sparse_key(std::span<const int> counts) {
  std::vector<int> key;
  for (int s = 0; s < static_cast<int>(counts.size()); ++s)
    if (counts[s] > 0) {
      key.push_back(s);
      key.push_back(counts[s]);
    }
  return key;
}

}  // namespace

std::vector<int> multiplicity_key(const PairView& view, std::span<const int> perm) {
  std::vector<int> counts(static_cast<std::size_t>(view.num_sums), 0);
  for (int i = 0; i < view.k; ++i) ++counts[view.sum_at(i, perm[i])];
  return sparse_key(counts);
}

CensusCore census_core(const PairView& view, bool matchings_only,
                       bool store_members) {
  CensusCoreFull full;
  std::map<std::vector<int>, std::size_t> index_of;
  CensusCore out;
  enumerate_perms(view, matchings_only,
                  [&](std::span<const int> perm, std::span<const int> counts) {
                    ++out.total;
                    auto key = sparse_key(counts);
                    auto [it, fresh] = index_of.emplace(std::move(key), out.keys.size());
                    if (fresh) {
                      out.keys.push_back(it->first);
                      out.sizes.push_back(0);
                      out.examples.emplace_back(perm.begin(), perm.end());
                    }
                    ++out.sizes[it->second];
                    (void)store_members;
                  });
  // Present classes in key order.
  std::vector<std::size_t> order(out.keys.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    return out.keys[x] < out.keys[y];
  });
  CensusCore sorted;
  sorted.total = out.total;
  for (std::size_t i : order) {
    sorted.keys.push_back(std::move(out.keys[i]));
    sorted.sizes.push_back(out.sizes[i]);
    sorted.examples.push_back(std::move(out.examples[i]));
  }
  return sorted;
}

CensusCoreFull census_core_full(const PairView& view, bool matchings_only) {
  std::map<std::vector<int>, std::size_t> index_of;
  CensusCoreFull full;
  auto& out = full.summary;
  enumerate_perms(view, matchings_only,
                  [&](std::span<const int> perm, std::span<const int> counts) {
                    ++out.total;
                    auto key = sparse_key(counts);
                    auto [it, fresh] = index_of.emplace(std::move(key), out.keys.size());
                    if (fresh) {
                      out.keys.push_back(it->first);
                      out.sizes.push_back(0);
                      out.examples.emplace_back(perm.begin(), perm.end());
                      full.members.emplace_back();
                    }
                    ++out.sizes[it->second];
                    full.members[it->second].emplace_back(perm.begin(), perm.end());
                  });
  std::vector<std::size_t> order(out.keys.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    return out.keys[x] < out.keys[y];
  });
  CensusCoreFull sorted;
  sorted.summary.total = out.total;
  for (std::size_t i : order) {
    sorted.summary.keys.push_back(std::move(out.keys[i]));
    sorted.summary.sizes.push_back(out.sizes[i]);
    sorted.summary.examples.push_back(std::move(out.examples[i]));
    sorted.members.push_back(std::move(full.members[i]));
  }
  return sorted;
}

std::uint32_t CensusCore::size_of_key(std::span<const int> key) const {
  for (std::size_t i = 0; i < keys.size(); ++i)
    if (std::equal(keys[i].begin(), keys[i].end(), key.begin(), key.end()))
      return sizes[i];
  return 0;
}

std::uint32_t CensusCore::min_class_size() const {
  std::uint32_t m = 0;
  for (std::uint32_t s : sizes) m = (m == 0 || s < m) ? s : m;
  return m;
}

std::size_t Census::total() const {
  std::size_t n = 0;
  for (const auto& c : classes) n += c.members.size();
  return n;
}

std::ptrdiff_t Census::class_of(const MultiplicityFunction& m) const {
  for (std::size_t i = 0; i < classes.size(); ++i)
    if (classes[i].m == m) return static_cast<std::ptrdiff_t>(i);
  return -1;
}

namespace {

Census lift_census(const CensusCoreFull& core, const SetPair& pair,
                   const std::vector<Element>& sum_values) {
  Census out;
  const auto& a_items = pair.a.items();
  const auto& b_items = pair.b.items();
  out.classes.resize(core.summary.keys.size());
  for (std::size_t c = 0; c < core.summary.keys.size(); ++c) {
    const auto& key = core.summary.keys[c];
    for (std::size_t i = 0; i + 1 < key.size(); i += 2)
      out.classes[c].m.counts[sum_values[static_cast<std::size_t>(key[i])]] =
          key[i + 1];
    for (const auto& perm : core.members[c]) {
      std::vector<std::pair<Element, Element>> pairs;
      pairs.reserve(perm.size());
      for (std::size_t i = 0; i < perm.size(); ++i)
        pairs.emplace_back(a_items[i], b_items[static_cast<std::size_t>(perm[i])]);
      out.classes[c].members.emplace_back(std::move(pairs));
    }
  }
  return out;
}

Census enumerate_census(const SetPair& pair, const Operator& op,
                        std::size_t max_size, bool matchings_only) {
  if (pair.a.size() > max_size)
    throw CensusBoundError("census: |A| = " + std::to_string(pair.a.size()) +
                           " exceeds the bound " + std::to_string(max_size));
  std::vector<Element> sum_values;
  const PairView view = make_pair_view(pair, op, &sum_values);
  return lift_census(census_core_full(view, matchings_only), pair, sum_values);
}

}  // namespace

Census enumerate_matchings(const SetPair& pair, const Operator& op,
                           std::size_t max_size) {
  return enumerate_census(pair, op, max_size, true);
}

Census enumerate_bijections(const SetPair& pair, const Operator& op,
                            std::size_t max_size) {
  return enumerate_census(pair, op, max_size, false);
}

bool is_acyclic(const Matching& f, const SetPair& pair, const Operator& op,
                std::size_t max_size) {
  if (!is_matching(f, pair, op))
    throw std::invalid_argument("is_acyclic: f is not a matching");
  const Census census = enumerate_matchings(pair, op, max_size);
  const std::ptrdiff_t c = census.class_of(multiplicity(f, op));
  return c >= 0 && census.classes[static_cast<std::size_t>(c)].members.size() == 1;
}

}  // namespace acym
