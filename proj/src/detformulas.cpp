#include "sytcount/detformulas.hpp"

#include <map>
#include <unordered_map>
#include <vector>

namespace sytcount {

namespace {

constexpr const char* kRowVar = "u";

std::map<std::string, BigRat> assignment(const std::vector<std::string>& vars, std::span<const BigRat> values) {
    std::map<std::string, BigRat> at;
    for (std::size_t i = 0; i < vars.size(); ++i) at.emplace(vars[i], values[i]);
    return at;
}

void require_ordered(std::span<const BigRat> t, std::size_t d) {
    if (t.size() != d) throw std::invalid_argument("expected " + std::to_string(d) + " t-values");
    for (std::size_t i = 0; i < t.size(); ++i) {
        const BigRat lo = i == 0 ? BigRat(0) : t[i - 1];
        if (i == 0 ? t[i] <= 0 : t[i] < lo) throw std::invalid_argument("t-values must satisfy 0 < t_1 <= ... <= t_d");
        if (t[i] > 1) throw std::invalid_argument("t-values must not exceed 1");
    }
}

// c * var^e, or 0 when e < 0.
MPoly power_entry(const BigRat& c, const std::string& var, long e) {
    if (e < 0 || c == 0) return MPoly();
    return MPoly::monomial(c, var, static_cast<unsigned>(e));
}

}  // namespace

BigInt require_integer(const BigRat& v, const std::string& what) {
    if (!is_integer(v)) throw IntegralityError(what + " produced the non-integer value " + v.get_str());
    return v.get_num();
}

MPoly det_poly(const PolyMatrix& m) {
    const std::size_t n = m.rows();
    if (n != m.cols() || n == 0) throw std::invalid_argument("det_poly: matrix must be square and nonempty");
    if (n > 20) throw std::invalid_argument("det_poly: matrix too large for cofactor expansion");
    // det of rows [row..n) restricted to the columns in `mask`.
    std::unordered_map<unsigned long, MPoly> memo;
    auto minor = [&](auto&& self, std::size_t row, unsigned long mask) -> MPoly {
        if (row == n) return MPoly(1);
        if (auto it = memo.find(mask); it != memo.end()) return it->second;
        MPoly total;
        int sign = 1;
        for (std::size_t j = 0; j < n; ++j) {
            if (!(mask & (1UL << j))) continue;
            if (!m(row, j).is_zero()) {
                MPoly term = m(row, j) * self(self, row + 1, mask & ~(1UL << j));
                if (sign > 0)
                    total += term;
                else
                    total -= term;
            }
            sign = -sign;
        }
        memo.emplace(mask, total);
        return total;
    };
    return minor(minor, 0, (1UL << n) - 1);
}

RatMatrix evaluate(const PolyMatrix& m, const std::map<std::string, BigRat>& at) {
    RatMatrix r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = m(i, j).evaluate(at);
    return r;
}

BigInt frobenius_young(const Partition& p) {
    const long d = static_cast<long>(p.length());
    BigInt num = factorial(p.size());
    BigInt den = 1;
    for (long i = 1; i <= d; ++i) {
        den *= factorial(p[i - 1] + d - i);
        for (long j = i + 1; j <= d; ++j) num *= (p[i - 1] - p[j - 1] - i + j);
    }
    return require_integer(make_rat(num, den), "frobenius_young");
}

RatMatrix aitken_matrix(const SkewShape& s) {
    const long d = static_cast<long>(s.outer().length());
    RatMatrix m(static_cast<std::size_t>(d), static_cast<std::size_t>(d), BigRat(0));
    for (long i = 1; i <= d; ++i)
        for (long j = 1; j <= d; ++j) {
            const long e = s.outer()[i - 1] - s.inner()[j - 1] - i + j;
            if (e >= 0) m(i - 1, j - 1) = make_rat(1, factorial(e));
        }
    return m;
}

BigInt aitken_count(const SkewShape& s) {
    return require_integer(BigRat(factorial(s.size())) * det_rational(aitken_matrix(s)), "aitken_count");
}

PolyMatrix jmatrix_closed(const Partition& p) {
    const long d = static_cast<long>(p.length());
    const auto t = indexed_vars("t", p.length());
    PolyMatrix m(static_cast<std::size_t>(d), static_cast<std::size_t>(d));
    for (long i = 1; i <= d; ++i) {
        const long top = p[i - 1] + d - i;
        for (long j = 1; j <= d; ++j) {
            const long e = p[i - 1] + j - i;
            m(i - 1, j - 1) = power_entry(make_rat(falling(top, d - j), factorial(top)), t[i - 1], e);
        }
    }
    return m;
}

BigRat jvolume(const Partition& p, std::span<const BigRat> t) {
    require_ordered(t, p.length());
    return det_rational(evaluate(jmatrix_closed(p), assignment(indexed_vars("t", p.length()), t)));
}

PolyMatrix fd_closed(int d) {
    if (d < 1) throw std::invalid_argument("fd_closed: d must be positive");
    const auto y = indexed_vars("y", static_cast<std::size_t>(d));
    PolyMatrix m(static_cast<std::size_t>(d), static_cast<std::size_t>(d));
    for (long i = 1; i <= d; ++i)
        for (long j = 1; j <= d; ++j)
            m(i - 1, j - 1) = power_entry(make_rat(falling(j, i - 1), factorial(j)), y[i - 1], j - i + 1);
    return m;
}

MPoly jvolume_by_integration(const Partition& p) {
    const std::size_t d = p.length();
    const auto t = indexed_vars("t", d);
    const auto y = indexed_vars("y", d);

    // Column 1 is already integrated by fd_closed; every row is rewritten in
    // the shared row variable u, meaning "the next cell to the right".
    PolyMatrix m = fd_closed(static_cast<int>(d));
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) m(i, j) = substitute(m(i, j), y[i], MPoly::var(kRowVar));

    auto finalize = [&](std::size_t row) {
        for (std::size_t j = 0; j < d; ++j) m(row, j) = substitute(m(row, j), kRowVar, MPoly::var(t[row]));
    };
    for (std::size_t i = 0; i < d; ++i)
        if (p[i] == 1) finalize(i);

    for (int col = 2; col <= p[0]; ++col) {
        std::size_t depth = 0;
        while (depth < d && p[depth] >= col) ++depth;
        for (std::size_t i = depth; i-- > 0;) {
            for (std::size_t j = 0; j < d; ++j) {
                MPoly anti = antiderivative(m(i, j), kRowVar);
                if (i > 0) {
                    // Choose the constant so the antiderivative equals the row above.
                    MPoly shift = m(i - 1, j) - anti;
                    if (!shift.is_constant())
                        throw std::logic_error("row-cancellation identity failed at column " + std::to_string(col));
                    anti += shift;
                }
                m(i, j) = std::move(anti);
            }
            if (p[i] == col) finalize(i);
        }
    }
    return det_poly(m);
}

PolyMatrix jmatrix_skew(const SkewShape& s) {
    const long d = static_cast<long>(s.outer().length());
    const auto t = indexed_vars("t", s.outer().length());
    PolyMatrix m(static_cast<std::size_t>(d), static_cast<std::size_t>(d));
    for (long i = 1; i <= d; ++i) {
        const long lam = s.outer()[i - 1];
        const long top = lam + d - i;
        for (long j = 1; j <= d; ++j) {
            const long mu = s.inner()[j - 1];
            const long e = lam - mu + j - i;
            m(i - 1, j - 1) = power_entry(make_rat(falling(top, d + mu - j), factorial(top)), t[i - 1], e);
        }
    }
    return m;
}

BigRat jvolume_skew(const SkewShape& s, std::span<const BigRat> t) {
    require_ordered(t, s.outer().length());
    return det_rational(evaluate(jmatrix_skew(s), assignment(indexed_vars("t", s.outer().length()), t)));
}

BigInt count_via_volume(const Partition& p) {
    std::vector<BigRat> ones(p.length(), BigRat(1));
    return require_integer(BigRat(factorial(p.size())) * jvolume(p, ones), "count_via_volume");
}

BigInt count_via_volume(const SkewShape& s) {
    std::vector<BigRat> ones(s.outer().length(), BigRat(1));
    return require_integer(BigRat(factorial(s.size())) * jvolume_skew(s, ones), "count_via_volume");
}

std::pair<BigInt, BigInt> vandermonde_check(std::span<const long> xs) {
    const std::size_t d = xs.size();
    if (d == 0) throw std::invalid_argument("vandermonde_check: empty input");
    for (std::size_t i = 0; i < d; ++i) {
        if (xs[i] < 0) throw std::invalid_argument("vandermonde_check: entries must be nonnegative");
        if (i > 0 && xs[i] >= xs[i - 1]) throw std::invalid_argument("vandermonde_check: entries must strictly decrease");
    }
    RatMatrix m(d, d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 1; j <= d; ++j) m(i, j - 1) = BigRat(falling(xs[i], static_cast<long>(d - j)));
    BigInt product = 1;
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i + 1; j < d; ++j) product *= (xs[i] - xs[j]);
    return {require_integer(det_rational(m), "vandermonde_check"), product};
}

}  // namespace sytcount
