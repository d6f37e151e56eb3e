#include "sytcount/products.hpp"

#include <stdexcept>

#include "sytcount/detformulas.hpp"

namespace sytcount {

namespace {

HalfGamma gamma_at(HalfInteger z) {
    if (z.twice() <= 0) throw std::domain_error("Gamma argument must be positive");
    return gamma_half(z.twice());
}

HalfInteger half(long twice) { return HalfInteger::from_twice(twice); }

BigInt integral_count(const HalfGamma& product, long n, const std::string& what) {
    if (!product.is_rational())
        throw IntegralityError(what + ": pi factors did not cancel (" + product.str() + ")");
    return require_integer(BigRat(factorial(n)) * product.rat(), what);
}

void require(bool ok, const std::string& what) {
    if (!ok) throw std::domain_error(what);
}

}  // namespace

HalfGamma selberg_rhs(const SelbergParams& p) {
    require(p.k >= 1, "selberg_rhs: k must be positive");
    HalfGamma acc(BigRat(factorial(p.k)), 0);
    const HalfGamma gamma_g = gamma_at(p.gamma);
    for (long i = 0; i < p.k; ++i) {
        const HalfInteger ig = i * p.gamma;
        acc *= gamma_at(p.alpha + ig);
        acc *= gamma_at(p.beta + ig);
        acc *= gamma_at(p.gamma + ig);
        acc /= gamma_at(p.alpha + p.beta + (i + p.k - 1) * p.gamma);
        acc /= gamma_g;
    }
    return acc;
}

HalfGamma staircase_gamma_product(long m, long k) {
    require(m >= 0 && k >= 1, "staircase: need m >= 0, k >= 1");
    HalfGamma acc = HalfGamma::one();
    for (long i = 0; i < k; ++i) {
        acc *= gamma_at(half(2 * m + 2 + i));    // m+1+i/2
        acc *= gamma_at(half(2 + i));            // 1+i/2
        acc *= gamma_at(half(1 + i));            // (1+i)/2
        acc /= gamma_at(half(2 * m + 3 + i + k));  // m+1+(i+k+1)/2
        acc /= gamma_at(half(2 * m + 2 + 2 * i));  // m+1+i
        acc /= gamma_at(half(1));
    }
    return acc;
}

BigInt truncated_staircase_count(long m, long k) {
    return integral_count(staircase_gamma_product(m, k), m * k + k * (k + 1) / 2, "truncated_staircase_count");
}

HalfGamma psyt_gamma_product(long m, long r, long k) {
    require(m >= 0 && r >= 0 && k >= 1, "psyt: need m, r >= 0 and k >= 1");
    HalfGamma acc = HalfGamma::one();
    for (long i = 0; i < k; ++i) {
        acc *= gamma_at(half(2 * m + 2 + i));              // m+1+i/2
        acc *= gamma_at(half(2 * r + 2 + i));              // r+1+i/2
        acc *= gamma_at(half(1 + i));                      // (1+i)/2
        acc /= gamma_at(half(2 * (m + r) + 3 + i + k));    // m+r+1+(i+k+1)/2
        acc /= gamma_at(half(2 * m + 2 + 2 * i));          // m+1+i
        acc /= gamma_at(half(2 * r + 2));                  // r+1
        acc /= gamma_at(half(1));
    }
    return acc;
}

BigInt psyt_count(long m, long r, long k) {
    return integral_count(psyt_gamma_product(m, r, k), (m + r) * k + k * (k + 1) / 2, "psyt_count");
}

BigInt ne_corner_removed_count(long m, long k) {
    require(m >= 1 && k >= 0 && k <= m, "ne_corner_removed_count: need 1 <= m and 0 <= k <= m");
    const BigInt coeff = multinomial(3 * m - k + 1, {m, m + 1, m - k});
    const BigInt num = BigInt((k + 2) * (k + 2)) * (2 * m + 1) + (m + 2);
    const BigInt den = BigInt(m + 1) * (m + 2) * (2 * m + 1) * (2 * m + 3);
    return require_integer(make_rat(coeff * num, den), "ne_corner_removed_count");
}

BigInt second_row_truncated_count(long m, long k) {
    require(m >= 2 && k >= 0, "second_row_truncated_count: need m >= 2, k >= 0");
    const BigRat first = make_rat(BigInt((k + 2) * (k + 2)) * (2 * m - 3) + m, BigInt(m + k + 2) * (m + k + 1)) *
                         BigRat(multinomial(3 * m + k - 1, {m + k, m - 1, m}));
    const BigRat second = make_rat(3, 3 * m - 1) * BigRat(multinomial(3 * m - 1, {m + 1, m - 2, m}));
    const BigRat value = make_rat(1, BigInt(2 * m - 1) * (2 * m - 3)) * (first - second);
    return require_integer(value, "second_row_truncated_count");
}

BigInt middle_hole_count(long m) {
    require(m >= 0, "middle_hole_count: need m >= 0");
    const BigRat value = make_rat(m + 5, 10) * BigRat(binomial(m + 2, 2) * binomial(m + 9, 2));
    return require_integer(value, "middle_hole_count");
}

RowsShape staircase_shape(long m, long k) {
    require(m >= 0 && k >= 1, "staircase: need m >= 0, k >= 1");
    RowsShape s;
    for (long i = 1; i <= k; ++i) s.lengths.push_back(static_cast<int>(m + i));
    return s;
}

PsytShape psyt_family_shape(long m, long r, long k) {
    require(m >= 0 && r >= 0 && k >= 1, "psyt: need m, r >= 0 and k >= 1");
    std::vector<int> a, b;
    for (long i = 1; i <= k; ++i) {
        a.push_back(static_cast<int>(m + i));
        b.push_back(static_cast<int>(m + r + i));
    }
    return PsytShape(std::move(a), std::move(b));
}

RowsShape ne_corner_shape(long m, long k) {
    require(m >= 1 && k >= 0 && k <= m, "ne_corner: need 1 <= m and 0 <= k <= m");
    RowsShape s;
    s.lengths = {static_cast<int>(m), static_cast<int>(m + 1)};
    if (m - k > 0) s.lengths.push_back(static_cast<int>(m - k));
    return s;
}

RowsShape second_row_shape(long m, long k) {
    require(m >= 2 && k >= 0, "second_row: need m >= 2, k >= 0");
    return RowsShape{{static_cast<int>(m + k), static_cast<int>(m - 1), static_cast<int>(m)}, {}};
}

RowsShape middle_hole_shape(long m) {
    require(m >= 0, "middle_hole: need m >= 0");
    return RowsShape{{static_cast<int>(m + 3), 3, 3}, {Cell{2, 2}}};
}

namespace {

// Rows (m+1, ..., m+k) with m >= 0.
std::optional<long> staircase_offset(const std::vector<int>& lengths) {
    if (lengths.empty() || lengths[0] < 1) return std::nullopt;
    for (std::size_t i = 1; i < lengths.size(); ++i)
        if (lengths[i] != lengths[i - 1] + 1) return std::nullopt;
    return lengths[0] - 1;
}

std::optional<FamilyMatch> match_rows(const std::vector<int>& L) {
    const long k = static_cast<long>(L.size());
    if (auto m = staircase_offset(L)) return FamilyMatch{"staircase", {*m, k}, truncated_staircase_count(*m, k)};
    if (L.size() == 3) {
        // (m, m+1, m-k), 0 <= k < m
        const long m = L[0];
        if (m >= 1 && L[1] == m + 1 && L[2] >= 1 && L[2] <= m)
            return FamilyMatch{"necorner", {m, m - L[2]}, ne_corner_removed_count(m, m - L[2])};
        // (m+k, m-1, m), m >= 2
        const long m2 = L[2];
        if (m2 >= 2 && L[1] == m2 - 1 && L[0] >= m2)
            return FamilyMatch{"secondrow", {m2, L[0] - m2}, second_row_truncated_count(m2, L[0] - m2)};
    }
    return std::nullopt;
}

}  // namespace

std::optional<FamilyMatch> match_family(const ShapeSpec& shape) {
    if (const auto* p = std::get_if<Partition>(&shape)) return match_rows(p->parts());
    if (const auto* r = std::get_if<RowsShape>(&shape)) {
        if (r->holes.empty()) return match_rows(r->lengths);
        if (r->holes.size() == 1 && r->holes[0] == Cell{2, 2} && r->lengths.size() == 3 && r->lengths[0] >= 3 &&
            r->lengths[1] == 3 && r->lengths[2] == 3) {
            const long m = r->lengths[0] - 3;
            return FamilyMatch{"hole", {m}, middle_hole_count(m)};
        }
        return std::nullopt;
    }
    if (const auto* q = std::get_if<PsytShape>(&shape)) {
        auto m = staircase_offset(q->inner());
        if (!m || q->inner()[0] < 1) return std::nullopt;
        const long r = q->outer()[0] - q->inner()[0];
        for (std::size_t i = 0; i < q->inner().size(); ++i)
            if (q->outer()[i] - q->inner()[i] != r) return std::nullopt;
        const long k = static_cast<long>(q->inner().size());
        return FamilyMatch{"psyt", {*m, r, k}, psyt_count(*m, r, k)};
    }
    return std::nullopt;
}

}  // namespace sytcount
