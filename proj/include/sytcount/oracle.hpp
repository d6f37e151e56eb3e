#pragma once

// Ground-truth linear-extension counting for arbitrary finite posets.

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "sytcount/exact.hpp"
#include "sytcount/shapes.hpp"

namespace sytcount {

inline constexpr std::size_t kDefaultMemoLimit = 5'000'000;
inline constexpr int kBruteForceMaxSize = 10;

/// Thrown when the ideal lattice exceeds the configured memo limit.
class MemoLimitExceeded : public std::runtime_error {
public:
    explicit MemoLimitExceeded(std::size_t limit);
    std::size_t limit() const { return limit_; }

private:
    std::size_t limit_;
};

/// Number of linear extensions by dynamic programming over order ideals:
/// e(empty) = 1, e(I) = sum over maximal x in I of e(I - x).
///
/// Posets carrying row chains memoize on per-chain prefix lengths; others
/// memoize on the explicit ideal bitset. Throws std::invalid_argument on a
/// cyclic relation set.
BigInt count_linear_extensions(const CellPoset& p, std::size_t memo_limit = kDefaultMemoLimit);

/// Counts permutations of 0..n-1 compatible with every relation. n <= 10.
BigInt brute_force_extensions(const CellPoset& p);

/// Up to `limit` labelings (label[id] in 1..n) compatible with the order,
/// in lexicographic order of the label vector. n <= 10.
std::vector<std::vector<int>> enumerate_extensions(const CellPoset& p, std::size_t limit);

}  // namespace sytcount
