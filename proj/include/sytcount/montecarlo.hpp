#pragma once

// Monte Carlo check of the order-statistics model: each row receives its own
// sorted sample of i.i.d. uniforms, and the event "every column constraint
// holds" has probability count / multinomial(n; row lengths).

#include <cstdint>
#include <random>

#include "sytcount/exact.hpp"
#include "sytcount/shapes.hpp"

namespace sytcount {

/// Seeds one independent generator per block of trials.
class TrialStreams {
public:
    static constexpr std::uint64_t kBlockSize = 8192;

    explicit TrialStreams(std::uint64_t seed) : seed_(seed) {}
    std::mt19937_64 block(std::uint64_t index) const;

private:
    std::uint64_t seed_;
};

/// Uniform double in [0, 1) from the top 53 bits.
double uniform01(std::mt19937_64& rng);

/// One draw of the event for a poset whose chains are the shape's rows.
/// Ties count as violations of the strict inequalities.
bool sample_event(const CellPoset& poset, std::mt19937_64& rng);

struct McReport {
    std::uint64_t trials = 0;
    std::uint64_t hits = 0;
    BigRat p_hat;
    BigRat p_exact;
    double sigma = 0.0;
    double z_score = 0.0;
};

/// Deterministic for fixed (shape, trials, seed) regardless of `threads`.
/// The exact reference comes from exact_count and may throw MemoLimitExceeded.
McReport estimate(const ShapeSpec& shape, std::uint64_t trials, std::uint64_t seed, unsigned threads = 1);

}  // namespace sytcount
