#include "acym/operators.hpp"

#include <algorithm>
#include <stdexcept>

namespace acym {

namespace {

int table_point_index(const Element& e, int n, std::string_view role) {
  if (e.coords.size() != 1 || e.coords[0] < 0 || e.coords[0] >= n)
    throw std::invalid_argument(std::string(role) +
                                " is not a point of the table carrier");
  return static_cast<int>(e.coords[0]);
}

}  // namespace

Operator Operator::group_add(GroupSpec group) {
  return Operator(GroupAddOp{std::move(group)});
}

Operator Operator::cayley_table(std::vector<std::string> carrier,
                                std::vector<std::vector<std::string>> table) {
  const std::size_t n = carrier.size();
  if (n == 0) throw std::invalid_argument("table carrier is empty");
  TableOp op;
  op.carrier = std::move(carrier);
  for (std::size_t i = 0; i < n; ++i) {
    if (!op.label_index.emplace(op.carrier[i], static_cast<int>(i)).second)
      throw std::invalid_argument("duplicate carrier label '" + op.carrier[i] +
                                  "'");
  }
  if (table.size() != n)
    throw std::invalid_argument("table must have one row per carrier label");
  op.table.reserve(n * n);
  for (const auto& row : table) {
    if (row.size() != n)
      throw std::invalid_argument("table rows must match the carrier size");
    for (const auto& label : row) {
      auto it = op.label_index.find(label);
      if (it == op.label_index.end())
        throw std::invalid_argument("table entry '" + label +
                                    "' is not a carrier label");
      op.table.push_back(it->second);
    }
  }
  return Operator(std::move(op));
}

bool Operator::is_group_add() const {
  return std::holds_alternative<GroupAddOp>(impl_);
}

bool Operator::is_table() const { return std::holds_alternative<TableOp>(impl_); }

const GroupSpec* Operator::group() const {
  if (const auto* g = std::get_if<GroupAddOp>(&impl_)) return &g->group;
  return nullptr;
}

const std::vector<std::string>* Operator::labels() const {
  if (const auto* t = std::get_if<TableOp>(&impl_)) return &t->carrier;
  return nullptr;
}

Element Operator::apply(const Element& a, const Element& b) const {
  if (const auto* g = std::get_if<GroupAddOp>(&impl_)) return g->group.add(a, b);
  const auto& t = std::get<TableOp>(impl_);
  const int n = static_cast<int>(t.carrier.size());
  const int i = table_point_index(a, n, "left operand");
  const int j = table_point_index(b, n, "right operand");
  return Element({t.table[static_cast<std::size_t>(i) * n + j]});
}

std::optional<Element> Operator::unapply(const Element& c, const Element& a) const {
  if (const auto* g = std::get_if<GroupAddOp>(&impl_)) return g->group.sub(c, a);
  const auto& t = std::get<TableOp>(impl_);
  const int n = static_cast<int>(t.carrier.size());
  const int i = table_point_index(a, n, "left operand");
  const int target = table_point_index(c, n, "result");
  for (int j = 0; j < n; ++j)
    if (t.table[static_cast<std::size_t>(i) * n + j] == target)
      return Element({j});
  return std::nullopt;
}

std::optional<CancellationWitness> Operator::cancellation_witness() const {
  const auto* t = std::get_if<TableOp>(&impl_);
  if (t == nullptr) return std::nullopt;  // group addition is cancellative
  const int n = static_cast<int>(t->carrier.size());
  for (int i = 0; i < n; ++i) {
    std::vector<int> seen_at(static_cast<std::size_t>(n), -1);
    for (int j = 0; j < n; ++j) {
      const int v = t->table[static_cast<std::size_t>(i) * n + j];
      if (seen_at[v] >= 0)
        return CancellationWitness{Element({i}), Element({seen_at[v]}),
                                   Element({j})};
      seen_at[v] = j;
    }
  }
  return std::nullopt;
}

bool Operator::is_latin_square() const {
  const auto* t = std::get_if<TableOp>(&impl_);
  if (t == nullptr) return true;
  if (cancellation_witness()) return false;
  const int n = static_cast<int>(t->carrier.size());
  for (int j = 0; j < n; ++j) {
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (int i = 0; i < n; ++i) {
      const int v = t->table[static_cast<std::size_t>(i) * n + j];
      if (seen[v]) return false;
      seen[v] = true;
    }
  }
  return true;
}

std::optional<std::uint64_t> Operator::carrier_size() const {
  if (const auto* g = std::get_if<GroupAddOp>(&impl_)) return g->group.order();
  return std::get<TableOp>(impl_).carrier.size();
}

std::vector<Element> Operator::carrier_elements() const {
  if (const auto* g = std::get_if<GroupAddOp>(&impl_)) return g->group.elements();
  const auto& t = std::get<TableOp>(impl_);
  std::vector<Element> out;
  out.reserve(t.carrier.size());
  for (std::size_t i = 0; i < t.carrier.size(); ++i)
    out.push_back(Element({static_cast<std::int64_t>(i)}));
  return out;
}

std::optional<Element> Operator::zero() const {
  if (const auto* g = std::get_if<GroupAddOp>(&impl_)) return g->group.zero();
  return std::nullopt;
}

std::vector<int> Operator::dense_table() const {
  if (const auto* t = std::get_if<TableOp>(&impl_)) return t->table;
  const auto& g = std::get<GroupAddOp>(impl_).group;
  const auto order = g.order();
  if (!order) throw std::logic_error("dense_table requires a finite carrier");
  const auto n = static_cast<std::size_t>(*order);
  const std::vector<Element> elems = g.elements();
  std::vector<int> table(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      table[i * n + j] = static_cast<int>(g.index_of(g.add(elems[i], elems[j])));
  return table;
}

Element Operator::parse_point(std::string_view text) const {
  if (const auto* g = std::get_if<GroupAddOp>(&impl_))
    return parse_element(g->group, text);
  const auto& t = std::get<TableOp>(impl_);
  auto it = t.label_index.find(std::string(text));
  if (it == t.label_index.end())
    throw std::invalid_argument("'" + std::string(text) +
                                "' is not a carrier label");
  return Element({it->second});
}

std::string Operator::format_point(const Element& e) const {
  if (std::get_if<GroupAddOp>(&impl_) != nullptr) return format_element(e);
  const auto& t = std::get<TableOp>(impl_);
  const int n = static_cast<int>(t.carrier.size());
  return t.carrier[static_cast<std::size_t>(table_point_index(e, n, "point"))];
}

std::string Operator::describe() const {
  if (const auto* g = std::get_if<GroupAddOp>(&impl_))
    return format_group(g->group);
  return "table[" + std::to_string(std::get<TableOp>(impl_).carrier.size()) + "]";
}

}  // namespace acym
