#include "acym/group.hpp"

#include <charconv>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace acym {

namespace {

std::int64_t mod_reduce(std::int64_t v, std::int64_t n) {
  std::int64_t r = v % n;
  return r < 0 ? r + n : r;
}

std::int64_t parse_int(std::string_view s, std::string_view what) {
  std::int64_t value = 0;
  const char* begin = s.data();
  const char* end = begin + s.size();
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc{} || ptr != end) {
    throw std::invalid_argument("malformed " + std::string(what) + ": '" +
                                std::string(s) + "'");
  }
  return value;
}

}  // namespace

GroupSpec::GroupSpec(std::vector<std::int64_t> moduli) : moduli_(std::move(moduli)) {
  if (moduli_.empty())
    throw std::invalid_argument("group needs at least one factor");
  for (std::int64_t n : moduli_)
    if (n < 0) throw std::invalid_argument("group modulus must be >= 0");
}

bool GroupSpec::is_finite() const {
  for (std::int64_t n : moduli_)
    if (n == 0) return false;
  return true;
}

std::optional<std::uint64_t> GroupSpec::order() const {
  if (!is_finite()) return std::nullopt;
  unsigned __int128 prod = 1;
  for (std::int64_t n : moduli_) {
    prod *= static_cast<std::uint64_t>(n);
    if (prod > std::numeric_limits<std::uint64_t>::max()) return std::nullopt;
  }
  return static_cast<std::uint64_t>(prod);
}

Element GroupSpec::reduce(std::vector<std::int64_t> coords) const {
  if (coords.size() != moduli_.size())
    throw std::invalid_argument("element rank does not match group rank");
  for (std::size_t i = 0; i < coords.size(); ++i)
    if (moduli_[i] > 0) coords[i] = mod_reduce(coords[i], moduli_[i]);
  return Element(std::move(coords));
}

Element GroupSpec::zero() const {
  return Element(std::vector<std::int64_t>(moduli_.size(), 0));
}

Element GroupSpec::add(const Element& a, const Element& b) const {
  if (a.coords.size() != moduli_.size() || b.coords.size() != moduli_.size())
    throw std::invalid_argument("element rank does not match group rank");
  std::vector<std::int64_t> out(moduli_.size());
  for (std::size_t i = 0; i < moduli_.size(); ++i) {
    out[i] = a.coords[i] + b.coords[i];
    if (moduli_[i] > 0) out[i] = mod_reduce(out[i], moduli_[i]);
  }
  return Element(std::move(out));
}

Element GroupSpec::sub(const Element& a, const Element& b) const {
  if (a.coords.size() != moduli_.size() || b.coords.size() != moduli_.size())
    throw std::invalid_argument("element rank does not match group rank");
  std::vector<std::int64_t> out(moduli_.size());
  for (std::size_t i = 0; i < moduli_.size(); ++i) {
    out[i] = a.coords[i] - b.coords[i];
    if (moduli_[i] > 0) out[i] = mod_reduce(out[i], moduli_[i]);
  }
  return Element(std::move(out));
}

Element GroupSpec::element_at(std::uint64_t index) const {
  if (!is_finite())
    throw std::logic_error("element_at requires a finite group");
  std::vector<std::int64_t> coords(moduli_.size());
  // Lexicographic order = mixed radix with the first coordinate most
  // significant.
  for (std::size_t i = moduli_.size(); i-- > 0;) {
    const auto n = static_cast<std::uint64_t>(moduli_[i]);
    coords[i] = static_cast<std::int64_t>(index % n);
    index /= n;
  }
  if (index != 0) throw std::out_of_range("element index out of range");
  return Element(std::move(coords));
}

std::uint64_t GroupSpec::index_of(const Element& e) const {
  if (!is_finite())
    throw std::logic_error("index_of requires a finite group");
  if (e.coords.size() != moduli_.size())
    throw std::invalid_argument("element rank does not match group rank");
  std::uint64_t index = 0;
  for (std::size_t i = 0; i < moduli_.size(); ++i)
    index = index * static_cast<std::uint64_t>(moduli_[i]) +
            static_cast<std::uint64_t>(e.coords[i]);
  return index;
}

std::vector<Element> GroupSpec::elements() const {
  const auto n = order();
  if (!n) throw std::logic_error("elements() requires a finite group");
  std::vector<Element> out;
  out.reserve(static_cast<std::size_t>(*n));
  for (std::uint64_t i = 0; i < *n; ++i) out.push_back(element_at(i));
  return out;
}

bool GroupSpec::contains(const Element& e) const {
  if (e.coords.size() != moduli_.size()) return false;
  for (std::size_t i = 0; i < moduli_.size(); ++i)
    if (moduli_[i] > 0 && (e.coords[i] < 0 || e.coords[i] >= moduli_[i]))
      return false;
  return true;
}

GroupSpec parse_group(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty group expression");
  std::vector<std::int64_t> moduli;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t next = text.find('x', pos);
    std::string_view factor = text.substr(pos, next == std::string_view::npos
                                                   ? std::string_view::npos
                                                   : next - pos);
    if (factor.empty() || factor.front() != 'Z')
      throw std::invalid_argument("malformed group factor: '" +
                                  std::string(factor) + "'");
    factor.remove_prefix(1);
    if (factor.empty()) {
      moduli.push_back(0);  // bare Z: free factor
    } else {
      const std::int64_t n = parse_int(factor, "group modulus");
      if (n < 0) throw std::invalid_argument("group modulus must be >= 0");
      moduli.push_back(n);
    }
    if (next == std::string_view::npos) break;
    pos = next + 1;
    if (pos == text.size())
      throw std::invalid_argument("trailing 'x' in group expression");
  }
  return GroupSpec(std::move(moduli));
}

std::string format_group(const GroupSpec& g) {
  std::string out;
  for (std::size_t i = 0; i < g.rank(); ++i) {
    if (i > 0) out += 'x';
    out += 'Z';
    if (g.moduli()[i] > 0) out += std::to_string(g.moduli()[i]);
  }
  return out;
}

Element parse_element(const GroupSpec& g, std::string_view text) {
  std::vector<std::int64_t> coords;
  if (!text.empty() && text.front() == '(') {
    if (text.back() != ')')
      throw std::invalid_argument("unbalanced parentheses in element: '" +
                                  std::string(text) + "'");
    std::string_view inner = text.substr(1, text.size() - 2);
    std::size_t pos = 0;
    while (true) {
      std::size_t comma = inner.find(',', pos);
      std::string_view part = inner.substr(
          pos, comma == std::string_view::npos ? std::string_view::npos
                                               : comma - pos);
      coords.push_back(parse_int(part, "coordinate"));
      if (comma == std::string_view::npos) break;
      pos = comma + 1;
    }
  } else {
    coords.push_back(parse_int(text, "element"));
  }
  if (coords.size() != g.rank())
    throw std::invalid_argument("element rank does not match group '" +
                                format_group(g) + "': '" + std::string(text) +
                                "'");
  return g.reduce(std::move(coords));
}

std::string format_element(const Element& e) {
  if (e.coords.size() == 1) return std::to_string(e.coords[0]);
  std::string out = "(";
  for (std::size_t i = 0; i < e.coords.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(e.coords[i]);
  }
  out += ')';
  return out;
}

}  // namespace acym
