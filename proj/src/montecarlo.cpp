#include "sytcount/montecarlo.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <thread>
#include <vector>

#include "sytcount/methods.hpp"

namespace sytcount {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

}  // namespace

std::mt19937_64 TrialStreams::block(std::uint64_t index) const {
    return std::mt19937_64(splitmix64(seed_ ^ splitmix64(index)));
}

double uniform01(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

bool sample_event(const CellPoset& poset, std::mt19937_64& rng) {
    if (!poset.has_chains()) throw std::invalid_argument("sample_event: poset has no row chains");
    std::vector<double> value(static_cast<std::size_t>(poset.size));
    std::vector<double> row;
    for (const auto& chain : poset.chains) {
        row.resize(chain.size());
        for (double& v : row) v = uniform01(rng);
        std::sort(row.begin(), row.end());
        for (std::size_t i = 0; i < chain.size(); ++i) value[chain[i]] = row[i];
    }
    return std::all_of(poset.covers.begin(), poset.covers.end(),
                       [&](const auto& c) { return value[c.first] < value[c.second]; });
}

McReport estimate(const ShapeSpec& shape, std::uint64_t trials, std::uint64_t seed, unsigned threads) {
    if (trials == 0) throw std::invalid_argument("estimate: trials must be positive");
    const CellPoset poset = poset_of(shape);
    const CellGrid grid = grid_of(shape);
    const BigInt count = exact_count(shape);

    McReport rep;
    rep.trials = trials;
    rep.p_exact = make_rat(count, multinomial(grid.size(), grid.row_lengths()));

    const TrialStreams streams(seed);
    const std::uint64_t blocks = (trials + TrialStreams::kBlockSize - 1) / TrialStreams::kBlockSize;
    std::vector<std::uint64_t> block_hits(blocks, 0);
    auto run_block = [&](std::uint64_t b) {
        auto rng = streams.block(b);
        const std::uint64_t begin = b * TrialStreams::kBlockSize;
        const std::uint64_t end = std::min(trials, begin + TrialStreams::kBlockSize);
        std::uint64_t hits = 0;
        for (std::uint64_t i = begin; i < end; ++i) hits += sample_event(poset, rng) ? 1 : 0;
        block_hits[b] = hits;
    };

    const unsigned workers = std::max(1U, std::min<unsigned>(threads, static_cast<unsigned>(blocks)));
    if (workers == 1) {
        for (std::uint64_t b = 0; b < blocks; ++b) run_block(b);
    } else {
        std::atomic<std::uint64_t> next{0};
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < workers; ++w)
            pool.emplace_back([&] {
                for (std::uint64_t b = next++; b < blocks; b = next++) run_block(b);
            });
    }
    for (auto h : block_hits) rep.hits += h;

    rep.p_hat = make_rat(BigInt(static_cast<unsigned long>(rep.hits)), BigInt(static_cast<unsigned long>(trials)));
    const double p = rep.p_exact.get_d();
    rep.sigma = std::sqrt(p * (1.0 - p) / static_cast<double>(trials));
    const double diff = BigRat(rep.p_hat - rep.p_exact).get_d();
    if (rep.sigma > 0.0)
        rep.z_score = diff / rep.sigma;
    else
        rep.z_score = diff == 0.0 ? 0.0 : std::copysign(std::numeric_limits<double>::infinity(), diff);
    return rep;
}

}  // namespace sytcount
