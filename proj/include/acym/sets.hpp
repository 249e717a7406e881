#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "acym/operators.hpp"

namespace acym {

// Duplicate-free set of elements stored in canonical (lexicographic) order.
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(std::vector<Element> items);  // sorts and dedups

  const std::vector<Element>& items() const { return items_; }
  std::size_t size() const { return items_.size(); }
  bool empty() const { return items_.empty(); }
  bool contains(const Element& e) const;

  bool operator==(const ElementSet&) const = default;

 private:
  std::vector<Element> items_;
};

// Equal-size pair of nonempty sets. 0 not-in B and the weak condition are
// computed predicates rather than invariants, so counterexample searches can
// construct failing pairs.
struct SetPair {
  ElementSet a, b;
  SetPair(ElementSet a_in, ElementSet b_in);  // throws unless nonempty, |A| = |B|
};

// { a (+) b : a in A, b in B }, duplicate-free, canonically ordered.
ElementSet sumset(const ElementSet& a, const ElementSet& b, const Operator& op);

// A disjoint from A (+) B. Under it every bijection A -> B is a matching.
bool weak_condition(const SetPair& pair, const Operator& op);

// No x + y = z + w in B with {x,y} and {z,w} disjoint. Group addition only.
bool is_sidon(const ElementSet& b, const Operator& op);

// A disjoint from 2A = { a (+) a }. When true the identity map A -> A is a
// matching.
bool identity_premise(const ElementSet& a, const Operator& op);

// How the sumset meets A. Blocked (A+B = A) forces B to be a subgroup and A a
// coset of it; both claims are re-verified, and a verification failure is
// reported as Anomaly since it would indicate a bug, not a classification.
enum class PairClass { Blocked, FullyFree, Intermediate, Anomaly };

struct Diagnosis {
  PairClass kind = PairClass::Anomaly;
  std::optional<Element> coset_rep;  // Blocked: A = coset_rep + B
  std::string detail;
};

// Finite groups under group addition only.
Diagnosis degenerate_diagnosis(const SetPair& pair, const Operator& op);

const char* pair_class_name(PairClass c);

// Set literals: comma-separated point literals in braces, e.g. "{0,1,2,7}",
// "{(0,0),(1,0)}", or labels for table operators.
ElementSet parse_set(const Operator& op, std::string_view text);
std::string format_set(const Operator& op, const ElementSet& s);

}  // namespace acym
