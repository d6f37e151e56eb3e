#pragma once

// Product formulas for truncated shapes and partially standard tableaux,
// evaluated exactly with half-integer Gamma arithmetic.

#include <optional>
#include <string>
#include <vector>

#include "sytcount/exact.hpp"
#include "sytcount/shapes.hpp"

namespace sytcount {

/// A value in (1/2)Z, stored as twice the value.
class HalfInteger {
public:
    constexpr HalfInteger() = default;
    constexpr explicit HalfInteger(long integer) : twice_(2 * integer) {}
    static constexpr HalfInteger from_twice(long twice) {
        HalfInteger h;
        h.twice_ = twice;
        return h;
    }
    constexpr long twice() const { return twice_; }

    friend constexpr HalfInteger operator+(HalfInteger a, HalfInteger b) { return from_twice(a.twice_ + b.twice_); }
    friend constexpr HalfInteger operator*(long k, HalfInteger a) { return from_twice(k * a.twice_); }
    friend constexpr bool operator==(HalfInteger, HalfInteger) = default;

private:
    long twice_ = 0;
};

/// Parameters of Selberg's integral
///   int_[0,1]^k prod t_i^{alpha-1}(1-t_i)^{beta-1} prod_{i<j}|t_i-t_j|^{2 gamma} dt.
struct SelbergParams {
    HalfInteger alpha;
    HalfInteger beta;
    HalfInteger gamma;
    long k = 1;
};

/// k! prod_{i<k} Gamma(a+i g) Gamma(b+i g) Gamma(g+i g) / (Gamma(a+b+(i+k-1) g) Gamma(g)).
/// Throws std::domain_error when any Gamma argument is not positive.
HalfGamma selberg_rhs(const SelbergParams& p);

/// The Gamma product multiplying (mk + k(k+1)/2)! in the count of rows (m+1, ..., m+k).
HalfGamma staircase_gamma_product(long m, long k);
/// Tableaux of the left-justified rows (m+1, m+2, ..., m+k); m >= 0, k >= 1.
BigInt truncated_staircase_count(long m, long k);

/// The Gamma product multiplying ((m+r)k + k(k+1)/2)! in the PSYT count.
HalfGamma psyt_gamma_product(long m, long r, long k);
/// PSYT of shape (m+1..m+k) inside (m+r+1..m+r+k); m, r >= 0, k >= 1.
BigInt psyt_count(long m, long r, long k);

/// Rows (m, m+1, m-k): (m+1, m+1, m-k) with the north-east corner removed. 1 <= m, 0 <= k <= m.
BigInt ne_corner_removed_count(long m, long k);

/// Rows (m+k, m-1, m): (m+k, m, m) with the last box of row two removed. m >= 2, k >= 0.
BigInt second_row_truncated_count(long m, long k);

/// Rows (m+3, 3, 3) with cell (2,2) removed. m >= 0.
BigInt middle_hole_count(long m);

// Shapes realizing each family.
RowsShape staircase_shape(long m, long k);
PsytShape psyt_family_shape(long m, long r, long k);
RowsShape ne_corner_shape(long m, long k);
RowsShape second_row_shape(long m, long k);
RowsShape middle_hole_shape(long m);

struct FamilyMatch {
    std::string family;             // staircase, psyt, necorner, secondrow, hole
    std::vector<long> params;       // in the family's parameter order
    BigInt count;
};

/// Recognizes shapes covered by a product formula and evaluates it.
std::optional<FamilyMatch> match_family(const ShapeSpec& shape);

}  // namespace sytcount
