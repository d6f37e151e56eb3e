#include "sytcount/exact.hpp"

#include <numeric>
#include <utility>

namespace sytcount {

BigRat make_rat(const BigInt& num, const BigInt& den) {
    if (den == 0) throw std::domain_error("make_rat: zero denominator");
    BigRat r(num, den);
    r.canonicalize();
    return r;
}

std::string to_string(const BigInt& v) { return v.get_str(); }

std::string to_string(const BigRat& v) { return v.get_str(); }

bool is_integer(const BigRat& v) { return v.get_den() == 1; }

BigInt factorial(long n) {
    if (n < 0) throw std::domain_error("factorial: negative argument");
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

BigInt falling(long n, long k) {
    if (k < 0) throw std::domain_error("falling: negative length");
    BigInt r = 1;
    for (long i = 0; i < k; ++i) r *= (n - i);
    return r;
}

BigInt multinomial(long n, std::span<const long> parts) {
    long sum = 0;
    for (long p : parts) {
        if (p < 0) throw std::invalid_argument("multinomial: negative part");
        sum += p;
    }
    if (sum != n) throw std::invalid_argument("multinomial: parts do not sum to n");
    BigInt r = factorial(n);
    for (long p : parts) r /= factorial(p);
    return r;
}

BigInt multinomial(long n, std::initializer_list<long> parts) {
    return multinomial(n, std::span<const long>(parts.begin(), parts.size()));
}

BigInt binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

BigInt stirling2(long n, long k) {
    if (n < 0 || k < 0 || k > n) throw std::domain_error("stirling2: need 0 <= k <= n");
    // Row-by-row recurrence; row[j] holds S(i, j).
    std::vector<BigInt> row(static_cast<std::size_t>(n) + 1, 0);
    row[0] = 1;
    for (long i = 1; i <= n; ++i) {
        for (long j = i; j >= 1; --j) row[j] = j * row[j] + row[j - 1];
        row[0] = 0;
    }
    return row[k];
}

BigInt stirling1_signed(long r, long k) {
    if (r < 0 || k < 0 || k > r) throw std::domain_error("stirling1_signed: need 0 <= k <= r");
    // (x)_{i+1} = (x)_i * (x - i)  =>  s(i+1,j) = s(i,j-1) - i*s(i,j)
    std::vector<BigInt> row(static_cast<std::size_t>(r) + 1, 0);
    row[0] = 1;
    for (long i = 0; i < r; ++i) {
        for (long j = i + 1; j >= 1; --j) row[j] = row[j - 1] - i * row[j];
        row[0] = -i * row[0];
    }
    return row[k];
}

BigRat beta_integral(long r, long s) {
    if (r < 0 || s < 0) throw std::domain_error("beta_integral: negative exponent");
    return make_rat(factorial(r) * factorial(s), factorial(r + s + 1));
}

HalfGamma::HalfGamma(BigRat rat, long pi_half_exp) : rat_(std::move(rat)), pi_half_exp_(pi_half_exp) {
    canonicalize();
}

void HalfGamma::canonicalize() {
    rat_.canonicalize();
    if (rat_ == 0) pi_half_exp_ = 0;
}

HalfGamma& HalfGamma::operator*=(const HalfGamma& o) {
    rat_ *= o.rat_;
    pi_half_exp_ += o.pi_half_exp_;
    canonicalize();
    return *this;
}

HalfGamma& HalfGamma::operator/=(const HalfGamma& o) {
    if (o.rat_ == 0) throw std::domain_error("HalfGamma: division by zero");
    rat_ /= o.rat_;
    pi_half_exp_ -= o.pi_half_exp_;
    canonicalize();
    return *this;
}

HalfGamma& HalfGamma::operator*=(const BigRat& r) {
    rat_ *= r;
    canonicalize();
    return *this;
}

std::string HalfGamma::str() const {
    if (pi_half_exp_ == 0) return rat_.get_str();
    return rat_.get_str() + "*pi^(" + std::to_string(pi_half_exp_) + "/2)";
}

HalfGamma gamma_half(long twoN) {
    if (twoN <= 0) throw std::domain_error("gamma_half: argument must be a positive half-integer");
    if (twoN % 2 == 0) return HalfGamma(BigRat(factorial(twoN / 2 - 1)), 0);
    // Gamma(j + 1/2) = (2j)! / (4^j j!) * sqrt(pi)
    const long j = (twoN - 1) / 2;
    BigInt four_j = 1;
    mpz_mul_2exp(four_j.get_mpz_t(), four_j.get_mpz_t(), static_cast<mp_bitcnt_t>(2 * j));
    return HalfGamma(make_rat(factorial(2 * j), four_j * factorial(j)), 1);
}

BigRat det_rational(const RatMatrix& m) {
    if (m.rows() != m.cols() || m.rows() == 0)
        throw std::invalid_argument("det_rational: matrix must be square and nonempty");
    const std::size_t n = m.rows();
    RatMatrix a = m;
    BigRat det = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && a(pivot, col) == 0) ++pivot;
        if (pivot == n) return 0;
        if (pivot != col) {
            for (std::size_t j = col; j < n; ++j) std::swap(a(pivot, j), a(col, j));
            det = -det;
        }
        det *= a(col, col);
        for (std::size_t i = col + 1; i < n; ++i) {
            if (a(i, col) == 0) continue;
            BigRat f = a(i, col) / a(col, col);
            for (std::size_t j = col; j < n; ++j) a(i, j) -= f * a(col, j);
        }
    }
    return det;
}

}  // namespace sytcount
