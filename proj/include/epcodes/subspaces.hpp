#pragma once

// Enumeration of the subspaces of F_p^n through their reduced row-echelon
// forms: one pivot pattern plus a free value at every non-pivot position to
// the right of each pivot.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "epcodes/fp_linalg.hpp"

namespace epc {

/// Number of k-dimensional subspaces of F_p^n, saturating at UINT64_MAX.
[[nodiscard]] std::uint64_t gaussian_binomial(unsigned p, std::size_t n, std::size_t k);
/// Number of subspaces of every dimension, saturating.
[[nodiscard]] std::uint64_t subspace_count(unsigned p, std::size_t n);

/// All k-subsets of {0..n-1}, ascending, in lexicographic order.
[[nodiscard]] std::vector<std::vector<std::size_t>> pivot_patterns(std::size_t n, std::size_t k);

using SubspaceVisitor = std::function<void(const FpCode&)>;

/// Every subspace whose RREF has exactly these pivot columns, each once.
void for_each_subspace_with_pivots(unsigned p, std::size_t n, const std::vector<std::size_t>& pivots,
                                   const SubspaceVisitor& visit);
/// Every k-dimensional subspace of F_p^n, each once.
void for_each_subspace(unsigned p, std::size_t n, std::size_t k, const SubspaceVisitor& visit);
[[nodiscard]] std::vector<FpCode> enumerate_subspaces(unsigned p, std::size_t n, std::size_t k);

}  // namespace epc
