#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace acym {

// A point of an ambient group, as a coordinate vector. Coordinates of finite
// factors are kept as canonical residues in [0, n); free factors carry plain
// integers. Elements order lexicographically, which is the canonical order
// used everywhere (set storage, sum labelling, sweep enumeration).
struct Element {
  std::vector<std::int64_t> coords;

  Element() = default;
  explicit Element(std::vector<std::int64_t> c) : coords(std::move(c)) {}
  auto operator<=>(const Element&) const = default;
};

// Direct product of cyclic factors Z/n1 x ... x Z/nr. A modulus of 0 denotes
// a free Z factor, so {0,3} is Z x Z/3Z. Finite iff every modulus >= 1.
class GroupSpec {
 public:
  explicit GroupSpec(std::vector<std::int64_t> moduli);

  std::size_t rank() const { return moduli_.size(); }
  const std::vector<std::int64_t>& moduli() const { return moduli_; }
  bool is_finite() const;
  // Group order; nullopt when infinite or too large for 64 bits.
  std::optional<std::uint64_t> order() const;

  Element reduce(std::vector<std::int64_t> coords) const;
  Element zero() const;
  Element add(const Element& a, const Element& b) const;
  Element sub(const Element& a, const Element& b) const;

  // Finite groups only: elements indexed in canonical (lexicographic) order.
  Element element_at(std::uint64_t index) const;
  std::uint64_t index_of(const Element& e) const;
  std::vector<Element> elements() const;

  bool contains(const Element& e) const;  // canonical and of matching rank

  bool operator==(const GroupSpec&) const = default;

 private:
  std::vector<std::int64_t> moduli_;
};

// Grammar: factors "Z<n>" joined by "x"; a bare "Z" (or "Z0") is a free
// factor. Examples: "Z13", "Z2xZ4", "ZxZ3".
GroupSpec parse_group(std::string_view text);
std::string format_group(const GroupSpec& g);

// Rank-1 elements print as a bare integer ("7"), higher ranks as a
// parenthesised tuple ("(1,3)"). Input is canonicalised.
Element parse_element(const GroupSpec& g, std::string_view text);
std::string format_element(const Element& e);

}  // namespace acym
