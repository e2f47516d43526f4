#include "epcodes/subspaces.hpp"

#include <limits>
#include <utility>

#include "epcodes/errors.hpp"

namespace epc {

namespace {

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) { return a > kSaturated - b ? kSaturated : a + b; }

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) return 0;
  return a > kSaturated / b ? kSaturated : a * b;
}

}  // namespace

std::uint64_t gaussian_binomial(unsigned p, std::size_t n, std::size_t k) {
  if (k > n) return 0;
  // [m, j] = [m-1, j-1] + p^j [m-1, j]
  std::vector<std::uint64_t> row(k + 1, 0);
  row[0] = 1;
  for (std::size_t m = 1; m <= n; ++m) {
    for (std::size_t j = std::min(m, k); j >= 1; --j) {
      std::uint64_t pj = 1;
      for (std::size_t e = 0; e < j; ++e) pj = sat_mul(pj, p);
      row[j] = sat_add(row[j - 1], sat_mul(pj, row[j]));
    }
  }
  return row[k];
}

std::uint64_t subspace_count(unsigned p, std::size_t n) {
  std::uint64_t total = 0;
  for (std::size_t k = 0; k <= n; ++k) total = sat_add(total, gaussian_binomial(p, n, k));
  return total;
}

std::vector<std::vector<std::size_t>> pivot_patterns(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  if (k > n) return out;
  std::vector<std::size_t> cur(k);
  for (std::size_t i = 0; i < k; ++i) cur[i] = i;
  while (true) {
    out.push_back(cur);
    std::size_t i = k;
    while (i > 0 && cur[i - 1] == n - k + (i - 1)) --i;
    if (i == 0) break;
    ++cur[i - 1];
    for (std::size_t j = i; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

void for_each_subspace_with_pivots(unsigned p, std::size_t n, const std::vector<std::size_t>& pivots,
                                   const SubspaceVisitor& visit) {
  require_prime(p);
  const std::size_t k = pivots.size();
  std::vector<bool> is_pivot(n, false);
  for (auto c : pivots) {
    if (c >= n) throw ShapeError("pivot column out of range");
    is_pivot[c] = true;
  }
  FpMat basis(p, k, n);
  std::vector<std::pair<std::size_t, std::size_t>> free_cells;
  for (std::size_t i = 0; i < k; ++i) {
    basis.set(i, pivots[i], 1);
    for (std::size_t j = pivots[i] + 1; j < n; ++j)
      if (!is_pivot[j]) free_cells.emplace_back(i, j);
  }
  std::vector<unsigned> digits(free_cells.size(), 0);
  while (true) {
    visit(FpCode::from_rref(basis, pivots));
    std::size_t i = 0;
    for (; i < digits.size(); ++i) {
      if (++digits[i] < p) {
        basis.set(free_cells[i].first, free_cells[i].second, digits[i]);
        break;
      }
      digits[i] = 0;
      basis.set(free_cells[i].first, free_cells[i].second, 0);
    }
    if (i == digits.size()) return;
  }
}

void for_each_subspace(unsigned p, std::size_t n, std::size_t k, const SubspaceVisitor& visit) {
  for (const auto& piv : pivot_patterns(n, k)) for_each_subspace_with_pivots(p, n, piv, visit);
}

std::vector<FpCode> enumerate_subspaces(unsigned p, std::size_t n, std::size_t k) {
  std::vector<FpCode> out;
  for_each_subspace(p, n, k, [&](const FpCode& c) { out.push_back(c); });
  return out;
}

}  // namespace epc
