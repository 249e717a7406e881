#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <variant>
#include <vector>

#include "acym/group.hpp"

namespace acym {

// Evidence that left cancellation fails: a (+) b1 = a (+) b2 with b1 != b2.
struct CancellationWitness {
  Element a, b1, b2;
};

// A left-cancellative binary operation (or a candidate for one): either
// componentwise group addition, or an explicit Cayley table over a finite
// labelled carrier. Table points are represented as rank-1 Elements holding
// the carrier index, so sets, matchings and sweeps treat both kinds
// uniformly; labels exist only at the text/JSON boundary. Construction
// validates shape (square table, known labels) but deliberately not
// cancellation, which is a diagnosed property, not an invariant.
class Operator {
 public:
  static Operator group_add(GroupSpec group);
  static Operator cayley_table(std::vector<std::string> carrier,
                               std::vector<std::vector<std::string>> table);

  bool is_group_add() const;
  bool is_table() const;
  const GroupSpec* group() const;                   // nullptr for tables
  const std::vector<std::string>* labels() const;   // nullptr for group add

  Element apply(const Element& a, const Element& b) const;
  // The unique b with a (+) b = c, or nullopt when c is not in row a's image.
  std::optional<Element> unapply(const Element& c, const Element& a) const;

  // nullopt means every row is injective (the operation is left-cancellative).
  std::optional<CancellationWitness> cancellation_witness() const;
  // Full quasigroup structure: rows and columns both permutations.
  bool is_latin_square() const;

  std::optional<std::uint64_t> carrier_size() const;  // nullopt when infinite
  std::vector<Element> carrier_elements() const;      // finite, canonical order
  std::optional<Element> zero() const;                // group add only
  // Finite carriers: n*n row-major table of carrier indices.
  std::vector<int> dense_table() const;

  Element parse_point(std::string_view text) const;
  std::string format_point(const Element& e) const;
  std::string describe() const;  // "Z13", "table[5]"

 private:
  struct GroupAddOp {
    GroupSpec group;
  };
  struct TableOp {
    std::vector<std::string> carrier;
    std::vector<int> table;  // n*n carrier indices, row = left operand
    std::unordered_map<std::string, int> label_index;
  };
  explicit Operator(std::variant<GroupAddOp, TableOp> impl) : impl_(std::move(impl)) {}

  std::variant<GroupAddOp, TableOp> impl_;
};

}  // namespace acym
