#pragma once

// Independent reference implementations and generators shared by the tests.
// Nothing here calls into the library's counting code.

#include <algorithm>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "sytcount/exact.hpp"
#include "sytcount/shapes.hpp"

namespace testsupport {

using sytcount::BigInt;
using sytcount::BigRat;

// Linear extensions by DP over subsets (bit i set = element i already placed).
inline BigInt subset_dp_extensions(int n, const std::vector<std::pair<int, int>>& relations) {
    std::vector<std::uint32_t> below(static_cast<std::size_t>(n), 0);
    for (auto [a, b] : relations) below[static_cast<std::size_t>(b)] |= 1U << a;
    std::vector<BigInt> ways(std::size_t{1} << n, 0);
    ways[0] = 1;
    for (std::uint32_t s = 0; s < (1U << n); ++s) {
        if (ways[s] == 0) continue;
        for (int x = 0; x < n; ++x) {
            if (s & (1U << x)) continue;
            if ((below[static_cast<std::size_t>(x)] & s) != below[static_cast<std::size_t>(x)]) continue;
            ways[s | (1U << x)] += ways[s];
        }
    }
    return ways[(std::size_t{1} << n) - 1];
}

// Straight-shape cell relations built directly from the diagram (right and down neighbours).
inline std::vector<std::pair<int, int>> diagram_relations(const std::vector<int>& rows) {
    std::vector<std::vector<int>> id(rows.size());
    int next = 0;
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (int c = 0; c < rows[r]; ++c) id[r].push_back(next++);
    std::vector<std::pair<int, int>> rel;
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (int c = 0; c < rows[r]; ++c) {
            if (c + 1 < rows[r]) rel.emplace_back(id[r][c], id[r][c + 1]);
            if (r + 1 < rows.size() && c < rows[r + 1]) rel.emplace_back(id[r][c], id[r + 1][c]);
        }
    return rel;
}

// n! / prod of hook lengths.
inline BigInt hook_product(const std::vector<int>& rows) {
    int n = 0;
    for (int r : rows) n += r;
    BigInt num = 1;
    for (int i = 2; i <= n; ++i) num *= i;
    BigInt den = 1;
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (int c = 0; c < rows[r]; ++c) {
            int arm = rows[r] - c - 1;
            int leg = 0;
            for (std::size_t below = r + 1; below < rows.size() && rows[below] > c; ++below) ++leg;
            den *= arm + leg + 1;
        }
    return num / den;
}

struct Gen {
    std::mt19937_64 rng;
    explicit Gen(std::uint64_t seed) : rng(seed) {}

    long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

    BigRat rational(long max_num = 20, long max_den = 9) {
        return sytcount::make_rat(BigInt(uniform(-max_num, max_num)), BigInt(uniform(1, max_den)));
    }

    // Random acyclic relation set on n elements (edges go from lower to higher id, then relabelled).
    std::vector<std::pair<int, int>> dag(int n, double density) {
        std::vector<int> perm(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i;
        std::shuffle(perm.begin(), perm.end(), rng);
        std::bernoulli_distribution edge(density);
        std::vector<std::pair<int, int>> rel;
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b)
                if (edge(rng)) rel.emplace_back(perm[static_cast<std::size_t>(a)], perm[static_cast<std::size_t>(b)]);
        return rel;
    }

    std::vector<int> permutation(int n) {
        std::vector<int> p(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) p[static_cast<std::size_t>(i)] = i;
        std::shuffle(p.begin(), p.end(), rng);
        return p;
    }

    // Strictly decreasing nonnegative integers, each <= max_entry.
    std::vector<long> strictly_decreasing(std::size_t d, long max_entry) {
        std::vector<long> pool;
        for (long v = 0; v <= max_entry; ++v) pool.push_back(v);
        std::shuffle(pool.begin(), pool.end(), rng);
        std::vector<long> xs(pool.begin(), pool.begin() + static_cast<long>(d));
        std::sort(xs.rbegin(), xs.rend());
        return xs;
    }
};

// All skew shapes outer/inner with outer_1 <= max_part, at most max_rows rows,
// at most max_cells cells, inner nonempty and strictly inside (library convention).
inline std::vector<sytcount::SkewShape> skew_shapes(int max_part, int max_rows, int max_cells) {
    std::vector<sytcount::SkewShape> out;
    for (int n = 1; n <= max_part * max_rows; ++n) {
        for (const auto& outer : sytcount::partitions_of(n)) {
            if (outer.length() > static_cast<std::size_t>(max_rows) || outer[0] > max_part) continue;
            const std::size_t d = outer.length();
            std::vector<int> inner(d, 0);
            // Enumerate weakly decreasing inner with inner_i < outer_i on nonzero rows and fewer nonzero rows than d.
            auto rec = [&](auto&& self, std::size_t i, int cap) -> void {
                if (i == d) {
                    std::size_t nz = 0;
                    int removed = 0;
                    for (int v : inner) {
                        if (v > 0) ++nz;
                        removed += v;
                    }
                    if (nz >= d) return;
                    if (n - removed > max_cells) return;
                    out.emplace_back(outer, inner);
                    return;
                }
                for (int v = 0; v <= cap; ++v) {
                    if (v > 0 && v >= outer[i]) break;
                    inner[i] = v;
                    self(self, i + 1, v);
                }
                inner[i] = 0;
            };
            rec(rec, 0, outer[0]);
        }
    }
    return out;
}

}  // namespace testsupport
