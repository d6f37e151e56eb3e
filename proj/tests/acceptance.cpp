// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "support.hpp"
#include "sytcount/detformulas.hpp"
#include "sytcount/methods.hpp"
#include "sytcount/montecarlo.hpp"
#include "sytcount/oracle.hpp"
#include "sytcount/polyint.hpp"
#include "sytcount/products.hpp"

using namespace sytcount;

namespace {

// Small posets seen by criteria 1-5; criterion 9 replays them through brute force.
std::vector<std::pair<std::string, CellPoset>> g_small_posets;

BigInt oracle(const ShapeSpec& s) {
    const CellPoset p = poset_of(s);
    if (p.size <= 9) g_small_posets.emplace_back(canonical_string(s), p);
    return count_linear_extensions(p);
}

struct Check {
    std::size_t failures = 0;
    std::size_t checks = 0;
    std::string first_failure;

    void expect(bool ok, const std::string& what) {
        ++checks;
        if (ok) return;
        if (failures++ == 0) first_failure = what;
    }
    void equal(const BigInt& a, const BigInt& b, const std::string& what) {
        expect(a == b, what + ": " + to_string(a) + " != " + to_string(b));
    }
};

struct Criterion {
    int id;
    std::string title;
    double budget_s;
    std::function<void(Check&)> body;
};

// ---------------------------------------------------------------- 1

void reference_constants(Check& c) {
    struct Case {
        const char* spec;
        long expected;
        std::vector<Method> methods;
    };
    const std::vector<Case> cases = {
        {"4,2,1", 35, {Method::hook, Method::aitken, Method::volume, Method::integrate, Method::brute}},
        {"5,4,2/3,1", 169, {Method::aitken, Method::volume, Method::brute}},
        {"shifted:4,2,1", 7, {Method::brute}},
        {"rows:2,3,4", 12, {Method::product, Method::brute}},
        {"psyt:1,2,3<2,3,4", 72, {Method::product, Method::brute}},
    };
    for (const auto& k : cases) {
        const ShapeSpec s = parse_shape(k.spec);
        c.equal(oracle(s), k.expected, std::string(k.spec) + " oracle");
        for (Method m : k.methods)
            c.equal(count_with(s, m), k.expected, std::string(k.spec) + " " + std::string(method_name(m)));
        c.expect(!k.methods.empty(), std::string(k.spec) + " needs a second method");
    }
}

// ---------------------------------------------------------------- 2

void four_way_partitions(Check& c) {
    std::size_t shapes = 0;
    for (int n = 1; n <= 10; ++n)
        for (const auto& p : partitions_of(n)) {
            ++shapes;
            const std::string name = canonical_string(p);
            const BigInt hook = frobenius_young(p);
            c.equal(aitken_count(SkewShape(p, {})), hook, name + " aitken");
            c.equal(count_via_volume(p), hook, name + " volume");
            c.equal(oracle(p), hook, name + " oracle");
        }
    c.expect(shapes == 138, "expected 138 partitions of n <= 10");
    c.expect(partitions_of(10).size() == 42, "expected 42 partitions of 10");
}

// ---------------------------------------------------------------- 3

void polynomial_identity(Check& c) {
    for (int n = 1; n <= 20; ++n)
        for (const auto& p : partitions_of(n)) {
            if (p.length() > 4 || p[0] > 5) continue;
            const MPoly integrated = jvolume_by_integration(p);
            const MPoly closed = det_poly(jmatrix_closed(p));
            c.expect(integrated == closed, canonical_string(p) + ": integration " + integrated.str() + " vs closed " + closed.str());
        }
}

// ---------------------------------------------------------------- 4

void skew_agreement(Check& c) {
    std::size_t shapes = 0;
    for (const auto& s : testsupport::skew_shapes(5, 4, 9)) {
        ++shapes;
        const std::string name = canonical_string(s);
        const BigInt a = aitken_count(s);
        const std::vector<BigRat> ones(s.outer().length(), BigRat(1));
        const BigRat scaled = jvolume_skew(s, ones) * factorial(s.size());
        c.expect(scaled == BigRat(a), name + " volume at t=1");
        c.equal(oracle(s), a, name + " oracle");
    }
    c.expect(shapes > 500, "skew enumeration looks too small");

    // The closing 5x5 display for (6,5,4,4,1)/(3,2,2): entry = coeff * t_i^power.
    struct Entry {
        long num, den, power;
    };
    const Entry display[5][5] = {
        {{1, 6, 3}, {1, 120, 5}, {1, 720, 6}, {1, 362880, 9}, {1, 3628800, 10}},
        {{1, 1, 1}, {1, 6, 3}, {1, 24, 4}, {1, 5040, 7}, {1, 40320, 8}},
        {{0, 1, 0}, {1, 1, 1}, {1, 2, 2}, {1, 120, 5}, {1, 720, 6}},
        {{0, 1, 0}, {1, 1, 0}, {1, 1, 1}, {1, 24, 4}, {1, 120, 5}},
        {{0, 1, 0}, {0, 1, 0}, {0, 1, 0}, {1, 1, 0}, {1, 1, 1}},
    };
    const SkewShape ex(Partition({6, 5, 4, 4, 1}), {3, 2, 2});
    const PolyMatrix m = jmatrix_skew(ex);
    for (std::size_t i = 0; i < 5; ++i)
        for (std::size_t j = 0; j < 5; ++j) {
            const Entry& e = display[i][j];
            const MPoly expected =
                MPoly::monomial(make_rat(e.num, e.den), "t" + std::to_string(i + 1), static_cast<unsigned>(e.power));
            c.expect(m(i, j) == expected, "display entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                                             "): " + m(i, j).str() + " vs " + expected.str());
        }
    const BigInt ex_count = oracle(ex);
    c.equal(ex_count, 346632, "(6,5,4,4,1)/(3,2,2) oracle");
    c.equal(aitken_count(ex), ex_count, "(6,5,4,4,1)/(3,2,2) aitken");
    c.equal(count_via_volume(ex), ex_count, "(6,5,4,4,1)/(3,2,2) volume");
}

// ---------------------------------------------------------------- 5

void product_formulas(Check& c) {
    auto against = [&](const BigInt& formula, const ShapeSpec& s) {
        c.equal(formula, oracle(s), canonical_string(s) + " product vs oracle");
    };
    for (long m = 0; m <= 3; ++m)
        for (long k = 1; k <= 4; ++k) {
            c.expect(staircase_gamma_product(m, k).pi_half_exp() == 0, "staircase pi exponent");
            against(truncated_staircase_count(m, k), staircase_shape(m, k));
        }
    for (long m = 0; m <= 2; ++m)
        for (long r = 0; r <= 2; ++r)
            for (long k = 1; k <= 3; ++k) {
                c.expect(psyt_gamma_product(m, r, k).pi_half_exp() == 0, "psyt pi exponent");
                against(psyt_count(m, r, k), psyt_family_shape(m, r, k));
            }
    for (long m = 1; m <= 4; ++m)
        for (long k = 0; k <= m; ++k) against(ne_corner_removed_count(m, k), ne_corner_shape(m, k));
    for (long m = 2; m <= 4; ++m)
        for (long k = 0; k <= 3; ++k) against(second_row_truncated_count(m, k), second_row_shape(m, k));
    for (long m = 0; m <= 5; ++m) against(middle_hole_count(m), middle_hole_shape(m));
    c.equal(middle_hole_count(0), 18, "hole m=0");
}

// ---------------------------------------------------------------- 6

void stirling_identities(Check& c) {
    for (long m = 1; m <= 4; ++m)
        for (long k = 1; k <= m; ++k)
            for (long n = k; n <= 8; ++n) {
                const BigRat s(stirling2(n, k));
                const std::string at = "(" + std::to_string(n) + "," + std::to_string(k) + "," + std::to_string(m) + ")";
                c.expect(stirling2_expectation(n, k, m) == s, "expectation form " + at);
                c.expect(stirling2_chain(n, k, m) == s, "chain form " + at);
                c.expect(stirling2_simplex(n, k, m) == s, "simplex form " + at);
                if (m == k) c.expect(stirling2_chain(n, k, m) == stirling2_expectation(n, k, m), "m=k coincidence " + at);
            }
}

// ---------------------------------------------------------------- 7

void vandermonde_route(Check& c) {
    testsupport::Gen gen(20260101);
    for (int trial = 0; trial < 200; ++trial) {
        const auto xs = gen.strictly_decreasing(static_cast<std::size_t>(gen.uniform(1, 4)), 12);
        const auto [det, prod] = vandermonde_check(xs);
        std::ostringstream name;
        for (long x : xs) name << x << ' ';
        c.equal(det, prod, "vandermonde " + name.str());
    }
    for (long r = 0; r <= 8; ++r)
        for (long x = -8; x <= 16; ++x) {
            BigInt sum = 0;
            BigInt power = 1;
            for (long k = 0; k <= r; ++k) {
                sum += stirling1_signed(r, k) * power;
                power *= x;
            }
            BigInt fall = 1;
            for (long i = 0; i < r; ++i) fall *= x - i;
            c.equal(sum, fall, "s(" + std::to_string(r) + ",k) at x=" + std::to_string(x));
        }
}

// ---------------------------------------------------------------- 8

void monte_carlo(Check& c) {
    const char* specs[] = {"1,1", "4,2,1", "5,4,2/3,1", "shifted:4,2,1"};
    const std::uint64_t seeds[] = {7, 1234567, 0x5eed5eed5eedULL};
    for (const char* spec : specs)
        for (std::uint64_t seed : seeds) {
            const McReport r = estimate(parse_shape(spec), 100000, seed, 4);
            std::ostringstream what;
            what << spec << " seed " << seed << " z=" << r.z_score;
            c.expect(std::abs(r.z_score) < 4.0, what.str());
        }
}

// ---------------------------------------------------------------- 9

void oracle_self_consistency(Check& c) {
    c.expect(!g_small_posets.empty(), "no posets collected from earlier criteria");
    for (const auto& [name, p] : g_small_posets) c.equal(count_linear_extensions(p), brute_force_extensions(p), name + " brute force");
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {1, "reference constants via two or more methods", 1.0, reference_constants},
        {2, "hook = Aitken = n!J(1) = oracle for all partitions n <= 10", 30.0, four_way_partitions},
        {3, "integration algorithm = closed determinant, d <= 4, parts <= 5", 60.0, polynomial_identity},
        {4, "skew Aitken = n!J(1) = oracle; worked 5x5 example entrywise", 60.0, skew_agreement},
        {5, "product formulas = oracle over the parameter grids", 120.0, product_formulas},
        {6, "Stirling numbers from the three integral forms", 30.0, stirling_identities},
        {7, "falling-factorial Vandermonde and first-kind Stirling expansion", 30.0, vandermonde_route},
        {8, "Monte Carlo |z| < 4 for 4 shapes x 3 seeds at N = 1e5", 20.0, monte_carlo},
        {9, "ideal-lattice DP = permutation brute force on all posets n <= 9 above", 30.0, oracle_self_consistency},
    };
    int failed = 0;
    for (const auto& cr : criteria) {
        Check check;
        const auto start = std::chrono::steady_clock::now();
        std::string error;
        try {
            cr.body(check);
        } catch (const std::exception& e) {
            error = e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool in_budget = secs < cr.budget_s;
        const bool pass = error.empty() && check.failures == 0 && in_budget;
        if (!pass) ++failed;
        std::cout << (pass ? "PASS" : "FAIL") << "  criterion " << cr.id << ": " << cr.title << "  [" << check.checks
                  << " checks, " << std::fixed << std::setprecision(2) << secs << " s / " << cr.budget_s << " s budget]"
                  << std::defaultfloat << "\n";
        if (!error.empty()) std::cout << "      exception: " << error << "\n";
        if (check.failures) std::cout << "      " << check.failures << " failure(s); first: " << check.first_failure << "\n";
        if (!in_budget) std::cout << "      over the runtime budget\n";
    }
    std::cout << (failed == 0 ? "all acceptance criteria passed" : std::to_string(failed) + " criterion/criteria failed") << "\n";
    return failed == 0 ? 0 : 1;
}
