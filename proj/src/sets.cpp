#include "acym/sets.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace acym {

ElementSet::ElementSet(std::vector<Element> items) : items_(std::move(items)) {
  std::sort(items_.begin(), items_.end());
  items_.erase(std::unique(items_.begin(), items_.end()), items_.end());
}

bool ElementSet::contains(const Element& e) const {
  return std::binary_search(items_.begin(), items_.end(), e);
}

SetPair::SetPair(ElementSet a_in, ElementSet b_in)
    : a(std::move(a_in)), b(std::move(b_in)) {
  if (a.empty() || b.empty())
    throw std::invalid_argument("set pair: both sets must be nonempty");
  if (a.size() != b.size())
    throw std::invalid_argument("set pair: |A| must equal |B|");
}

ElementSet sumset(const ElementSet& a, const ElementSet& b, const Operator& op) {
  std::vector<Element> sums;
  sums.reserve(a.size() * b.size());
  for (const Element& x : a.items())
    for (const Element& y : b.items()) sums.push_back(op.apply(x, y));
  return ElementSet(std::move(sums));
}

bool weak_condition(const SetPair& pair, const Operator& op) {
  for (const Element& x : pair.a.items())
    for (const Element& y : pair.b.items())
      if (pair.a.contains(op.apply(x, y))) return false;
  return true;
}

bool is_sidon(const ElementSet& b, const Operator& op) {
  if (!op.is_group_add())
    throw std::invalid_argument("is_sidon requires group addition");
  // Group the unordered pairs {x,y} (x = y allowed) by their sum; a repeated
  // sum across support-disjoint pairs is a violation.
  const auto& items = b.items();
  std::map<Element, std::vector<std::pair<std::size_t, std::size_t>>> by_sum;
  for (std::size_t i = 0; i < items.size(); ++i)
    for (std::size_t j = i; j < items.size(); ++j)
      by_sum[op.apply(items[i], items[j])].push_back({i, j});
  for (const auto& [sum, pairs] : by_sum) {
    for (std::size_t p = 0; p < pairs.size(); ++p) {
      for (std::size_t q = p + 1; q < pairs.size(); ++q) {
        const auto [x, y] = pairs[p];
        const auto [z, w] = pairs[q];
        if (x != z && x != w && y != z && y != w) return false;
      }
    }
  }
  return true;
}

bool identity_premise(const ElementSet& a, const Operator& op) {
  for (const Element& x : a.items())
    if (a.contains(op.apply(x, x))) return false;
  return true;
}

Diagnosis degenerate_diagnosis(const SetPair& pair, const Operator& op) {
  const GroupSpec* g = op.group();
  if (g == nullptr)
    throw std::invalid_argument("degenerate_diagnosis requires group addition");
  if (!g->is_finite())
    throw std::invalid_argument("degenerate_diagnosis requires a finite group");

  const ElementSet sums = sumset(pair.a, pair.b, op);
  if (sums == pair.a) {
    // A+B = A: B must be a subgroup and A one of its cosets; check both.
    for (const Element& x : pair.b.items())
      for (const Element& y : pair.b.items())
        if (!pair.b.contains(g->add(x, y)))
          return {PairClass::Anomaly, std::nullopt,
                  "A+B = A but B is not closed under addition at " +
                      format_element(x) + " + " + format_element(y)};
    if (!pair.b.contains(g->zero()))
      return {PairClass::Anomaly, std::nullopt,
              "A+B = A but B does not contain 0"};
    const Element rep = pair.a.items().front();
    std::vector<Element> coset;
    coset.reserve(pair.b.size());
    for (const Element& y : pair.b.items()) coset.push_back(g->add(rep, y));
    if (ElementSet(std::move(coset)) != pair.a)
      return {PairClass::Anomaly, std::nullopt,
              "A+B = A but A is not the coset " + format_element(rep) + " + B"};
    return {PairClass::Blocked, rep,
            "A+B = A; B is a subgroup and A = " + format_element(rep) + " + B"};
  }

  bool disjoint = true;
  for (const Element& s : sums.items())
    if (pair.a.contains(s)) {
      disjoint = false;
      break;
    }
  if (disjoint)
    return {PairClass::FullyFree, std::nullopt,
            "A is disjoint from A+B; every bijection A -> B is a matching"};
  return {PairClass::Intermediate, std::nullopt,
          "A meets A+B but A+B != A"};
}

const char* pair_class_name(PairClass c) {
  switch (c) {
    case PairClass::Blocked:
      return "blocked";
    case PairClass::FullyFree:
      return "fully-free";
    case PairClass::Intermediate:
      return "intermediate";
    case PairClass::Anomaly:
      return "anomaly";
  }
  return "?";
}

ElementSet parse_set(const Operator& op, std::string_view text) {
  std::string_view body = text;
  if (!body.empty() && body.front() == '{') {
    if (body.back() != '}')
      throw std::invalid_argument("unbalanced braces in set literal: '" +
                                  std::string(text) + "'");
    body = body.substr(1, body.size() - 2);
  }
  std::vector<Element> items;
  if (!body.empty()) {
    // Split on top-level commas; tuple literals contain commas of their own.
    int depth = 0;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= body.size(); ++i) {
      if (i == body.size() || (body[i] == ',' && depth == 0)) {
        std::string_view part = body.substr(start, i - start);
        while (!part.empty() && part.front() == ' ') part.remove_prefix(1);
        while (!part.empty() && part.back() == ' ') part.remove_suffix(1);
        if (part.empty())
          throw std::invalid_argument("empty entry in set literal: '" +
                                      std::string(text) + "'");
        items.push_back(op.parse_point(part));
        start = i + 1;
      } else if (body[i] == '(') {
        ++depth;
      } else if (body[i] == ')') {
        --depth;
      }
    }
  }
  return ElementSet(std::move(items));
}

std::string format_set(const Operator& op, const ElementSet& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.items().size(); ++i) {
    if (i > 0) out += ',';
    out += op.format_point(s.items()[i]);
  }
  out += '}';
  return out;
}

}  // namespace acym
