#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>

#include "acym/pairview.hpp"

namespace acym {

inline constexpr std::size_t kDefaultCensusBound = 8;

struct CensusBoundError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Partition of all matchings (or of all bijections) from A to B by
// multiplicity function. A matching is acyclic exactly when its class is a
// singleton.
struct Census {
  struct Class {
    MultiplicityFunction m;
    std::vector<Matching> members;
  };
  std::vector<Class> classes;  // ordered by the sparse form of m

  std::size_t total() const;
  // Index of the class whose multiplicity function equals m, or -1.
  std::ptrdiff_t class_of(const MultiplicityFunction& m) const;
};

// Backtracking enumeration over bijections, pruning assignments with
// a (+) b in A when matchings_only. Throws CensusBoundError above max_size.
Census enumerate_matchings(const SetPair& pair, const Operator& op,
                           std::size_t max_size = kDefaultCensusBound);
Census enumerate_bijections(const SetPair& pair, const Operator& op,
                            std::size_t max_size = kDefaultCensusBound);

// True iff f's census class is a singleton. Throws std::invalid_argument when
// f is not a matching.
bool is_acyclic(const Matching& f, const SetPair& pair, const Operator& op,
                std::size_t max_size = kDefaultCensusBound);

// Index-level census for the sweep kernels. Classes are keyed by the sparse
// multiplicity form, flattened as (sum id, count) pairs in ascending id order.
struct CensusCore {
  std::vector<std::vector<int>> keys;
  std::vector<std::uint32_t> sizes;
  std::vector<std::vector<int>> examples;  // one permutation per class
  std::uint64_t total = 0;

  std::uint32_t size_of_key(std::span<const int> key) const;
  std::uint32_t min_class_size() const;
};

CensusCore census_core(const PairView& view, bool matchings_only,
                       bool store_members = false);
// store_members additionally collects every permutation per class.
struct CensusCoreFull {
  CensusCore summary;
  std::vector<std::vector<std::vector<int>>> members;  // per class
};
CensusCoreFull census_core_full(const PairView& view, bool matchings_only);

// Sparse multiplicity key of one permutation (b index per a index).
std::vector<int> multiplicity_key(const PairView& view, std::span<const int> perm);

}  // namespace acym
