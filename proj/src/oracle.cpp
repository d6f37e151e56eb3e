#include "sytcount/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <unordered_map>

namespace sytcount {

MemoLimitExceeded::MemoLimitExceeded(std::size_t limit)
    : std::runtime_error("ideal-lattice memo limit of " + std::to_string(limit) + " entries exceeded"),
      limit_(limit) {}

namespace {

std::vector<std::vector<int>> successors(const CellPoset& p) {
    std::vector<std::vector<int>> succ(static_cast<std::size_t>(p.size));
    for (auto [x, y] : p.covers) succ[x].push_back(y);
    return succ;
}

bool chains_partition(const CellPoset& p) {
    std::vector<int> seen(static_cast<std::size_t>(p.size), 0);
    for (const auto& c : p.chains) {
        if (c.size() > 255) return false;
        for (int x : c) {
            if (x < 0 || x >= p.size || seen[x]++) return false;
        }
    }
    return std::all_of(seen.begin(), seen.end(), [](int s) { return s == 1; });
}

// Ideals encoded by how many leading elements of each chain they contain.
class ProfileCounter {
public:
    ProfileCounter(const CellPoset& p, std::size_t limit) : succ_(successors(p)), chains_(p.chains), limit_(limit) {
        chain_of_.resize(static_cast<std::size_t>(p.size));
        index_in_chain_.resize(static_cast<std::size_t>(p.size));
        for (std::size_t c = 0; c < chains_.size(); ++c)
            for (std::size_t i = 0; i < chains_[c].size(); ++i) {
                chain_of_[chains_[c][i]] = c;
                index_in_chain_[chains_[c][i]] = i;
            }
    }

    BigInt run() {
        std::string full;
        for (const auto& c : chains_) full.push_back(static_cast<char>(c.size()));
        return count(full);
    }

private:
    bool inside(const std::string& profile, int x) const {
        return index_in_chain_[x] < static_cast<unsigned char>(profile[chain_of_[x]]);
    }

    BigInt count(std::string& profile) {
        if (std::all_of(profile.begin(), profile.end(), [](char c) { return c == 0; })) return 1;
        if (auto it = memo_.find(profile); it != memo_.end()) return it->second;
        BigInt total = 0;
        for (std::size_t c = 0; c < chains_.size(); ++c) {
            const auto len = static_cast<unsigned char>(profile[c]);
            if (len == 0) continue;
            const int top = chains_[c][len - 1];
            bool maximal = true;
            for (int y : succ_[top])
                if (inside(profile, y)) {
                    maximal = false;
                    break;
                }
            if (!maximal) continue;
            profile[c] = static_cast<char>(len - 1);
            total += count(profile);
            profile[c] = static_cast<char>(len);
        }
        if (memo_.size() >= limit_) throw MemoLimitExceeded(limit_);
        memo_.emplace(profile, total);
        return total;
    }

    std::vector<std::vector<int>> succ_;
    std::vector<std::vector<int>> chains_;
    std::vector<std::size_t> chain_of_;
    std::vector<std::size_t> index_in_chain_;
    std::size_t limit_;
    std::unordered_map<std::string, BigInt> memo_;
};

// Ideals encoded as explicit membership bitsets.
class BitsetCounter {
public:
    BitsetCounter(const CellPoset& p, std::size_t limit) : succ_(successors(p)), size_(p.size), limit_(limit) {}

    BigInt run() {
        std::string ideal(static_cast<std::size_t>((size_ + 7) / 8), '\0');
        for (int x = 0; x < size_; ++x) set(ideal, x, true);
        return count(ideal, size_);
    }

private:
    static bool get(const std::string& s, int x) { return (static_cast<unsigned char>(s[x / 8]) >> (x % 8)) & 1U; }
    static void set(std::string& s, int x, bool v) {
        auto byte = static_cast<unsigned char>(s[x / 8]);
        byte = v ? static_cast<unsigned char>(byte | (1U << (x % 8))) : static_cast<unsigned char>(byte & ~(1U << (x % 8)));
        s[x / 8] = static_cast<char>(byte);
    }

    BigInt count(std::string& ideal, int members) {
        if (members == 0) return 1;
        if (auto it = memo_.find(ideal); it != memo_.end()) return it->second;
        BigInt total = 0;
        for (int x = 0; x < size_; ++x) {
            if (!get(ideal, x)) continue;
            bool maximal = std::none_of(succ_[x].begin(), succ_[x].end(), [&](int y) { return get(ideal, y); });
            if (!maximal) continue;
            set(ideal, x, false);
            total += count(ideal, members - 1);
            set(ideal, x, true);
        }
        if (memo_.size() >= limit_) throw MemoLimitExceeded(limit_);
        memo_.emplace(ideal, total);
        return total;
    }

    std::vector<std::vector<int>> succ_;
    int size_;
    std::size_t limit_;
    std::unordered_map<std::string, BigInt> memo_;
};

void require_acyclic(const CellPoset& p) {
    if (!is_acyclic(p.size, p.covers)) throw std::invalid_argument("poset relations contain a cycle");
}

void require_small(const CellPoset& p) {
    if (p.size > kBruteForceMaxSize)
        throw std::invalid_argument("permutation brute force is limited to " + std::to_string(kBruteForceMaxSize) +
                                    " elements, got " + std::to_string(p.size));
}

// Calls visit(pos) for every pos (pos[x] = 0-based position of x) respecting the order,
// in lexicographic order of pos; stops when visit returns false.
template <typename Visit>
void for_each_extension(const CellPoset& p, Visit&& visit) {
    std::vector<int> pos(static_cast<std::size_t>(p.size));
    std::iota(pos.begin(), pos.end(), 0);
    do {
        bool ok = true;
        for (auto [x, y] : p.covers)
            if (pos[x] >= pos[y]) {
                ok = false;
                break;
            }
        if (ok && !visit(pos)) return;
    } while (std::next_permutation(pos.begin(), pos.end()));
}

}  // namespace

BigInt count_linear_extensions(const CellPoset& p, std::size_t memo_limit) {
    require_acyclic(p);
    if (p.size == 0) return 1;
    if (p.has_chains() && chains_partition(p)) return ProfileCounter(p, memo_limit).run();
    return BitsetCounter(p, memo_limit).run();
}

BigInt brute_force_extensions(const CellPoset& p) {
    require_small(p);
    require_acyclic(p);
    unsigned long count = 0;
    for_each_extension(p, [&](const std::vector<int>&) {
        ++count;
        return true;
    });
    return BigInt(count);
}

std::vector<std::vector<int>> enumerate_extensions(const CellPoset& p, std::size_t limit) {
    require_small(p);
    require_acyclic(p);
    std::vector<std::vector<int>> out;
    if (limit == 0) return out;
    for_each_extension(p, [&](const std::vector<int>& pos) {
        std::vector<int> labels(pos.size());
        for (std::size_t i = 0; i < pos.size(); ++i) labels[i] = pos[i] + 1;
        out.push_back(std::move(labels));
        return out.size() < limit;
    });
    return out;
}

}  // namespace sytcount
