#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "acym/sets.hpp"

namespace acym {

// A candidate bijection A -> B stored as (a, b) pairs ordered by a. Whether
// the pairs really form a bijection for a given SetPair is checked by
// is_bijection; the matching condition a (+) f(a) not-in A by is_matching.
struct Matching {
  std::vector<std::pair<Element, Element>> pairs;

  Matching() = default;
  explicit Matching(std::vector<std::pair<Element, Element>> p);

  std::optional<Element> image_of(const Element& a) const;
  bool operator==(const Matching&) const = default;
};

// The map x -> |{ a : a (+) f(a) = x }| over attained values only.
struct MultiplicityFunction {
  std::map<Element, int> counts;
  bool operator==(const MultiplicityFunction&) const = default;
};

bool is_bijection(const Matching& f, const SetPair& pair);

// True iff a (+) f(a) is never in A. Throws std::invalid_argument when f is
// not a bijection A -> B.
bool is_matching(const Matching& f, const SetPair& pair, const Operator& op);

MultiplicityFunction multiplicity(const Matching& f, const Operator& op);

}  // namespace acym
