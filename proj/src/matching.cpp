#include "acym/matching.hpp"

#include <algorithm>
#include <stdexcept>

namespace acym {

Matching::Matching(std::vector<std::pair<Element, Element>> p)
    : pairs(std::move(p)) {
  std::sort(pairs.begin(), pairs.end());
}

std::optional<Element> Matching::image_of(const Element& a) const {
  auto it = std::lower_bound(
      pairs.begin(), pairs.end(), a,
      [](const auto& pr, const Element& key) { return pr.first < key; });
  if (it != pairs.end() && it->first == a) return it->second;
  return std::nullopt;
}

bool is_bijection(const Matching& f, const SetPair& pair) {
  if (f.pairs.size() != pair.a.size()) return false;
  std::vector<Element> firsts, seconds;
  firsts.reserve(f.pairs.size());
  seconds.reserve(f.pairs.size());
  for (const auto& [a, b] : f.pairs) {
    firsts.push_back(a);
    seconds.push_back(b);
  }
  std::sort(seconds.begin(), seconds.end());
  // firsts is already sorted (constructor invariant); repeated a's collapse
  // under ElementSet comparison, so compare sizes first.
  if (std::adjacent_find(firsts.begin(), firsts.end()) != firsts.end())
    return false;
  if (std::adjacent_find(seconds.begin(), seconds.end()) != seconds.end())
    return false;
  return firsts == pair.a.items() && seconds == pair.b.items();
}

bool is_matching(const Matching& f, const SetPair& pair, const Operator& op) {
  if (!is_bijection(f, pair))
    throw std::invalid_argument("is_matching: f is not a bijection A -> B");
  for (const auto& [a, b] : f.pairs)
    if (pair.a.contains(op.apply(a, b))) return false;
  return true;
}

MultiplicityFunction multiplicity(const Matching& f, const Operator& op) {
  MultiplicityFunction m;
  for (const auto& [a, b] : f.pairs) ++m.counts[op.apply(a, b)];
  return m;
}

}  // namespace acym
