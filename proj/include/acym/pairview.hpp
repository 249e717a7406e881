#pragma once

#include <span>
#include <vector>

#include "acym/matching.hpp"

namespace acym {

// Dense index-level view of one (A, B, op) instance. Rows and columns are the
// positions of A and B in canonical order; entries are ids of the distinct
// sums (the image C' of the operation on A x B), likewise in canonical order.
// Every enumeration kernel (census, greedy pass, bipartite matching) runs on
// this, whatever the ambient operator is.
struct PairView {
  int k = 0;         // |A| = |B|
  int num_sums = 0;  // |C'|
  std::vector<int> sum_id;             // k*k row-major
  std::vector<std::uint8_t> sum_in_a;  // per sum id: is that value in A?

  int sum_at(int i, int j) const { return sum_id[static_cast<std::size_t>(i) * k + j]; }
};

// Element-level builder. sum_values, when given, receives the elements of C'
// indexed by sum id.
PairView make_pair_view(const SetPair& pair, const Operator& op,
                        std::vector<Element>* sum_values = nullptr);

// Index-level builder for sweep kernels: a and b are ascending carrier
// indices, table the n*n dense operation table. sum_carrier, when given,
// receives the carrier index of each sum id.
PairView make_pair_view_dense(std::span<const int> table, int n,
                              std::span<const int> a, std::span<const int> b,
                              std::vector<int>* sum_carrier = nullptr);

}  // namespace acym
