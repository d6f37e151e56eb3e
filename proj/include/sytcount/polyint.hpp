#pragma once

// Sparse multivariate polynomials with exact rational coefficients, plus
// exact integration over chains 0 < x1 < ... < xm < upper and over the
// standard simplex.

#include <map>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "sytcount/exact.hpp"

namespace sytcount {

/// Product of named variables raised to positive powers, sorted by name.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::vector<std::pair<std::string, unsigned>> powers);

    unsigned exponent(const std::string& var) const;
    const std::vector<std::pair<std::string, unsigned>>& powers() const { return powers_; }
    unsigned total_degree() const;

    /// Copy with `var` raised to `e` (e == 0 removes it).
    Monomial with(const std::string& var, unsigned e) const;
    Monomial without(const std::string& var) const { return with(var, 0); }

    friend Monomial operator*(const Monomial& a, const Monomial& b);
    friend auto operator<=>(const Monomial&, const Monomial&) = default;
    friend bool operator==(const Monomial&, const Monomial&) = default;

private:
    std::vector<std::pair<std::string, unsigned>> powers_;
};

class MPoly {
public:
    using Terms = std::map<Monomial, BigRat>;

    MPoly() = default;
    MPoly(const BigRat& c);  // NOLINT(google-explicit-constructor)
    MPoly(long c) : MPoly(BigRat(c)) {}  // NOLINT(google-explicit-constructor)

    static MPoly var(const std::string& name);
    /// c * name^e
    static MPoly monomial(const BigRat& c, const std::string& name, unsigned e);
    static MPoly term(const Monomial& m, const BigRat& c);

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    /// Constant term (0 when absent).
    BigRat constant() const;
    std::vector<std::string> variables() const;
    unsigned degree(const std::string& var) const;

    MPoly& operator+=(const MPoly& o);
    MPoly& operator-=(const MPoly& o);
    MPoly& operator*=(const MPoly& o);
    MPoly& operator*=(const BigRat& c);
    friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
    friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
    friend MPoly operator*(const MPoly& a, const MPoly& b);
    friend MPoly operator*(MPoly a, const BigRat& c) { return a *= c; }
    friend MPoly operator-(MPoly a) { return a *= BigRat(-1); }
    friend bool operator==(const MPoly&, const MPoly&) = default;

    /// p^e, expanded term-by-term with multinomial coefficients.
    MPoly pow(unsigned e) const;

    /// Value at a full assignment of variables; missing variables are an error.
    BigRat evaluate(const std::map<std::string, BigRat>& at) const;

    std::string str() const;
    friend std::ostream& operator<<(std::ostream& os, const MPoly& p) { return os << p.str(); }

private:
    void add_term(const Monomial& m, const BigRat& c);

    Terms terms_;
};

MPoly derivative(const MPoly& p, const std::string& var);

/// Antiderivative in `var` with zero constant term in `var`.
MPoly antiderivative(const MPoly& p, const std::string& var);

/// Replace every occurrence of `var` by `value`.
MPoly substitute(const MPoly& p, const std::string& var, const MPoly& value);

/// Integral of p over 0 < vars[0] < vars[1] < ... < vars[m-1] < upper,
/// iterated from the last variable inward.
MPoly chain_integrate(const MPoly& p, std::span<const std::string> vars, const MPoly& upper = MPoly(1));

/// Integral of prod x_i^{a_i} over {x_i >= 0, sum x_i <= 1} = prod a_i! / (sum a_i + m)!.
BigRat dirichlet_monomial(std::span<const long> exponents);

/// Integral of p over the standard simplex in `vars`. p may involve no other variables.
BigRat simplex_integrate(const MPoly& p, std::span<const std::string> vars);

// Integral representations of Stirling numbers of the second kind, for
// 1 <= k <= m and n >= k. Each returns S(n,k) exactly when correct.

/// C(n+m-k, m) * E[(xi_{1,m} + ... + xi_{k,m})^{n-k}] for uniform order statistics,
/// with the expectation taken against the order-statistics density m!.
BigRat stirling2_expectation(long n, long k, long m);

/// (n+m-k)_m * integral over 0 < x_1 < ... < x_m < 1 of (x_1 + ... + x_k)^{n-k}.
BigRat stirling2_chain(long n, long k, long m);

/// (n+m-k)_m * integral over the standard m-simplex of (x_1 + 2x_2 + ... + k x_k)^{n-k}.
BigRat stirling2_simplex(long n, long k, long m);

/// Names prefix1..prefixN.
std::vector<std::string> indexed_vars(const std::string& prefix, std::size_t count);

}  // namespace sytcount
