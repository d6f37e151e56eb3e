#include <doctest.h>

#include <cmath>

#include "sytcount/montecarlo.hpp"

using namespace sytcount;

TEST_CASE("uniform variates lie in [0,1)") {
    std::mt19937_64 rng(5);
    double lo = 1.0;
    double hi = 0.0;
    for (int i = 0; i < 100000; ++i) {
        const double u = uniform01(rng);
        REQUIRE(u >= 0.0);
        REQUIRE(u < 1.0);
        lo = std::min(lo, u);
        hi = std::max(hi, u);
    }
    CHECK(lo < 1e-3);
    CHECK(hi > 1.0 - 1e-3);
}

TEST_CASE("block streams are reproducible and distinct") {
    const TrialStreams a(42);
    const TrialStreams b(42);
    auto r1 = a.block(3);
    auto r2 = b.block(3);
    for (int i = 0; i < 10; ++i) CHECK(r1() == r2());
    auto r3 = a.block(4);
    auto r4 = a.block(3);
    CHECK(r3() != r4());
    auto r5 = TrialStreams(43).block(3);
    auto r6 = a.block(3);
    CHECK(r5() != r6());
}

TEST_CASE("single-row shapes always satisfy the event") {
    const CellPoset p = poset_of(parse_shape("5"));
    std::mt19937_64 rng(1);
    for (int i = 0; i < 1000; ++i) CHECK(sample_event(p, rng));
}

TEST_CASE("sampling needs row chains") {
    std::mt19937_64 rng(1);
    CHECK_THROWS(sample_event(dual(poset_of(parse_shape("2,1"))), rng));
}

TEST_CASE("report fields") {
    const McReport r = estimate(parse_shape("4,2,1"), 100000, 7);
    CHECK(r.trials == 100000);
    CHECK(r.hits <= r.trials);
    CHECK(r.p_exact == make_rat(1, 3));
    CHECK(r.p_hat == make_rat(BigInt(static_cast<unsigned long>(r.hits)), 100000));
    CHECK(r.sigma == doctest::Approx(std::sqrt((1.0 / 3) * (2.0 / 3) / 100000)));
    CHECK(std::abs(r.z_score) < 4.0);
    CHECK(estimate(parse_shape("5,4,2/3,1"), 10, 1).p_exact == make_rat(169, 210));
    CHECK_THROWS(estimate(parse_shape("4,2,1"), 0, 7));
}

TEST_CASE("estimates are deterministic and independent of thread count") {
    const ShapeSpec s = parse_shape("4,2,1");
    const McReport one = estimate(s, 50000, 99, 1);
    const McReport again = estimate(s, 50000, 99, 1);
    const McReport four = estimate(s, 50000, 99, 4);
    CHECK(one.hits == again.hits);
    CHECK(one.hits == four.hits);
    CHECK(one.z_score == four.z_score);
    CHECK(estimate(s, 50000, 100).hits != one.hits);
}

TEST_CASE("frozen hit count for a fixed seed") {
    CHECK(estimate(parse_shape("4,2,1"), 100000, 7).hits == 33394);
}

TEST_CASE("degenerate probability gives a zero z-score") {
    const McReport r = estimate(parse_shape("3"), 1000, 1);
    CHECK(r.hits == 1000);
    CHECK(r.sigma == 0.0);
    CHECK(r.z_score == 0.0);
}
