#pragma once

// Exact integer/rational arithmetic and the combinatorial coefficients used
// throughout the library. BigInt and BigRat are the GMP C++ classes; every
// BigRat produced here is canonical (lowest terms, positive denominator).

#include <gmpxx.h>

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace sytcount {

using BigInt = mpz_class;
using BigRat = mpq_class;

/// Build a canonical rational from numerator/denominator.
BigRat make_rat(const BigInt& num, const BigInt& den);

std::string to_string(const BigInt& v);
std::string to_string(const BigRat& v);

/// True iff the rational has denominator 1.
bool is_integer(const BigRat& v);

BigInt factorial(long n);

/// Falling factorial (n)_k = n(n-1)...(n-k+1); the empty product is 1.
BigInt falling(long n, long k);

/// n! / prod(parts_i!). Throws std::invalid_argument when the parts do not sum to n.
BigInt multinomial(long n, std::span<const long> parts);
BigInt multinomial(long n, std::initializer_list<long> parts);

BigInt binomial(long n, long k);

/// Stirling numbers of the second kind, S(n,k)=k*S(n-1,k)+S(n-1,k-1).
BigInt stirling2(long n, long k);

/// Signed Stirling numbers of the first kind: (x)_r = sum_k s(r,k) x^k.
BigInt stirling1_signed(long r, long k);

/// r! s! / (r+s+1)!, the integral of x^r (1-x)^s over [0,1].
BigRat beta_integral(long r, long s);

/// A value of the form rat * pi^(pi_half_exp / 2).
///
/// Gamma at positive half-integers always lands in this set, and so do the
/// products and quotients of such values. Canonical: rat == 0 implies
/// pi_half_exp == 0.
class HalfGamma {
public:
    HalfGamma() = default;
    HalfGamma(BigRat rat, long pi_half_exp);
    static HalfGamma one() { return HalfGamma(BigRat(1), 0); }

    const BigRat& rat() const { return rat_; }
    long pi_half_exp() const { return pi_half_exp_; }
    bool is_rational() const { return pi_half_exp_ == 0; }

    HalfGamma& operator*=(const HalfGamma& o);
    HalfGamma& operator/=(const HalfGamma& o);
    HalfGamma& operator*=(const BigRat& r);
    friend HalfGamma operator*(HalfGamma a, const HalfGamma& b) { return a *= b; }
    friend HalfGamma operator/(HalfGamma a, const HalfGamma& b) { return a /= b; }
    friend HalfGamma operator*(HalfGamma a, const BigRat& b) { return a *= b; }
    friend bool operator==(const HalfGamma& a, const HalfGamma& b) {
        return a.pi_half_exp_ == b.pi_half_exp_ && a.rat_ == b.rat_;
    }

    std::string str() const;

private:
    void canonicalize();

    BigRat rat_{0};
    long pi_half_exp_ = 0;
};

/// Gamma(twoN / 2) for twoN >= 1. Throws std::domain_error otherwise.
HalfGamma gamma_half(long twoN);

/// Dense row-major matrix.
template <typename T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    Matrix(std::size_t rows, std::size_t cols, const T& fill)
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

using RatMatrix = Matrix<BigRat>;

/// Exact determinant by Gaussian elimination with nonzero pivoting.
BigRat det_rational(const RatMatrix& m);

}  // namespace sytcount
