#include <doctest.h>

#include <string>
#include <vector>

#include "support.hpp"
#include "sytcount/polyint.hpp"

using namespace sytcount;

namespace {

MPoly random_poly(testsupport::Gen& gen, const std::vector<std::string>& vars, int terms, unsigned max_exp) {
    MPoly p;
    for (int i = 0; i < terms; ++i) {
        MPoly t(gen.rational());
        for (const auto& v : vars) t = t * MPoly::monomial(1, v, static_cast<unsigned>(gen.uniform(0, max_exp)));
        p += t;
    }
    return p;
}

std::map<std::string, BigRat> random_point(testsupport::Gen& gen, const std::vector<std::string>& vars) {
    std::map<std::string, BigRat> at;
    for (const auto& v : vars) at[v] = gen.rational(6, 5);
    return at;
}

}  // namespace

TEST_CASE("polynomial basics") {
    const MPoly x = MPoly::var("x");
    const MPoly y = MPoly::var("y");
    const MPoly p = (x + y) * (x - y);
    CHECK(p == x * x - y * y);
    CHECK(p.degree("x") == 2);
    CHECK(p.variables() == std::vector<std::string>{"x", "y"});
    CHECK((p - p).is_zero());
    CHECK(MPoly(5).is_constant());
    CHECK(MPoly(5).constant() == 5);
    CHECK((x + 3).constant() == 3);
    CHECK(p.evaluate({{"x", 3}, {"y", 2}}) == 5);
    CHECK_THROWS(p.evaluate({{"x", 3}}));
}

TEST_CASE("polynomial powers match repeated multiplication") {
    testsupport::Gen gen(3);
    const std::vector<std::string> vars{"a", "b", "c"};
    for (int trial = 0; trial < 30; ++trial) {
        const MPoly p = random_poly(gen, vars, static_cast<int>(gen.uniform(1, 4)), 2);
        const unsigned e = static_cast<unsigned>(gen.uniform(0, 4));
        MPoly expected(1);
        for (unsigned i = 0; i < e; ++i) expected = expected * p;
        CHECK(p.pow(e) == expected);
    }
}

TEST_CASE("derivative undoes antiderivative") {
    testsupport::Gen gen(5);
    const std::vector<std::string> vars{"u", "v"};
    for (int trial = 0; trial < 50; ++trial) {
        const MPoly p = random_poly(gen, vars, 4, 4);
        const MPoly a = antiderivative(p, "u");
        CHECK(derivative(a, "u") == p);
        CHECK(substitute(a, "u", MPoly(0)).is_zero());
    }
}

TEST_CASE("substitution agrees with evaluation") {
    testsupport::Gen gen(8);
    const std::vector<std::string> vars{"x", "y"};
    for (int trial = 0; trial < 40; ++trial) {
        const MPoly p = random_poly(gen, vars, 3, 3);
        const MPoly q = random_poly(gen, vars, 2, 2);
        const auto at = random_point(gen, vars);
        auto shifted = at;
        shifted["x"] = q.evaluate(at);
        CHECK(substitute(p, "x", q).evaluate(at) == p.evaluate(shifted));
    }
}

TEST_CASE("chain integral of 1 is the simplex volume") {
    const MPoly t = MPoly::var("t");
    for (std::size_t m = 1; m <= 6; ++m) {
        const auto x = indexed_vars("x", m);
        CHECK(chain_integrate(MPoly(1), x) == MPoly(make_rat(1, factorial(static_cast<long>(m)))));
        CHECK(chain_integrate(MPoly(1), x, t) == MPoly::monomial(make_rat(1, factorial(static_cast<long>(m))), "t", static_cast<unsigned>(m)));
    }
}

TEST_CASE("chain integral of a single order statistic") {
    // E[x_j] over m uniform order statistics is j/(m+1); the density is m!.
    for (long m = 1; m <= 5; ++m) {
        const auto x = indexed_vars("x", static_cast<std::size_t>(m));
        for (long j = 1; j <= m; ++j) {
            const MPoly value = chain_integrate(MPoly::var(x[static_cast<std::size_t>(j - 1)]), x);
            CHECK(value == MPoly(make_rat(j, (m + 1) * factorial(m))));
        }
    }
}

TEST_CASE("Dirichlet monomial integrals") {
    const std::vector<long> none{};
    CHECK(dirichlet_monomial(none) == 1);
    const std::vector<long> one{0};
    CHECK(dirichlet_monomial(one) == 1);
    const std::vector<long> two{1, 1};
    CHECK(dirichlet_monomial(two) == make_rat(1, 24));
    const std::vector<long> three{0, 0, 0};
    CHECK(dirichlet_monomial(three) == make_rat(1, 6));
}

TEST_CASE("simplex integral rejects foreign variables") {
    const auto x = indexed_vars("x", 2);
    CHECK(simplex_integrate(MPoly::var("x1") + MPoly::var("x2"), x) == make_rat(1, 3));
    CHECK_THROWS(simplex_integrate(MPoly::var("z"), x));
}

TEST_CASE("Stirling numbers from order-statistic integrals") {
    for (long m = 1; m <= 4; ++m)
        for (long k = 1; k <= m; ++k)
            for (long n = k; n <= 8; ++n) {
                const BigRat expected(stirling2(n, k));
                CHECK(stirling2_expectation(n, k, m) == expected);
                CHECK(stirling2_chain(n, k, m) == expected);
                CHECK(stirling2_simplex(n, k, m) == expected);
            }
    CHECK_THROWS(stirling2_chain(3, 0, 2));
    CHECK_THROWS(stirling2_chain(3, 3, 2));
    CHECK_THROWS(stirling2_chain(2, 3, 4));
}

TEST_CASE("polynomial printing") {
    const MPoly t1 = MPoly::var("t1");
    const MPoly t2 = MPoly::var("t2");
    CHECK((t1 * t2 - MPoly::monomial(make_rat(1, 2), "t1", 2)).str() == "t1*t2 - 1/2*t1^2");
    CHECK(MPoly().str() == "0");
}
