#pragma once

// Kostant partition functions and depth-truncated formal characters.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <random>
#include <unordered_map>
#include <utility>
#include <vector>

#include "trunco/root_datum.hpp"
#include "trunco/trunc_weights.hpp"

namespace trunco {

/// Orders cone vectors by height, then lexicographically descending.
struct ConeOrder {
    bool operator()(const RootCoords& a, const RootCoords& b) const
    {
        const int ha = height(a);
        const int hb = height(b);
        if (ha != hb) {
            return ha < hb;
        }
        return a > b;
    }
};

// ---------------------------------------------------------------------------
// Partition functions

/// Counts multisets of `parts` (vectors in Z_{>=0}^r, repeats allowed as distinct
/// labels) summing to a target. Memoized per instance; thread-safe.
class PartitionCounter {
public:
    explicit PartitionCounter(std::vector<RootCoords> parts) : parts_(std::move(parts)) {}

    std::int64_t count(const RootCoords& beta) const
    {
        if (!is_nonnegative(beta)) {
            throw ContractError("partition of a vector with a negative coordinate " + to_string(beta));
        }
        std::lock_guard<std::mutex> lock(mutex_);
        return count_from(beta, 0);
    }

    std::size_t cached() const
    {
        std::lock_guard<std::mutex> lock(mutex_);
        return memo_.size();
    }

private:
    std::int64_t count_from(const RootCoords& beta, std::size_t k) const
    {
        if (std::all_of(beta.begin(), beta.end(), [](int x) { return x == 0; })) {
            return 1;
        }
        if (k == parts_.size()) {
            return 0;
        }
        RootCoords key = beta;
        key.push_back(static_cast<int>(k));
        if (auto it = memo_.find(key); it != memo_.end()) {
            return it->second;
        }
        std::int64_t total = count_from(beta, k + 1);
        const RootCoords rest = beta - parts_[k];
        if (is_nonnegative(rest)) {
            total += count_from(rest, k);
        }
        memo_.emplace(std::move(key), total);
        return total;
    }

    std::vector<RootCoords> parts_;
    mutable std::mutex mutex_;
    mutable std::unordered_map<RootCoords, std::int64_t, IntVectorHash> memo_;
};

/// Datum-keyed shared partition caches.
inline std::shared_ptr<const PartitionCounter> partition_cache_for(const RootDatum& d, int copies = 1)
{
    static std::mutex mutex;
    static std::map<std::pair<std::string, int>, std::shared_ptr<const PartitionCounter>> caches;
    std::lock_guard<std::mutex> lock(mutex);
    auto& slot = caches[{d.key(), copies}];
    if (!slot) {
        std::vector<RootCoords> parts;
        for (int c = 0; c < copies; ++c) {
            for (const auto& beta : d.positive_roots()) {
                parts.push_back(beta);
            }
        }
        slot = std::make_shared<const PartitionCounter>(std::move(parts));
    }
    return slot;
}

/// Number of multisets of positive roots summing to beta.
inline std::int64_t kostant_partition(const RootDatum& d, const RootCoords& beta)
{
    if (beta.size() != static_cast<std::size_t>(d.rank())) {
        throw ContractError("partition argument of the wrong rank");
    }
    return partition_cache_for(d)->count(beta);
}

/// Partition function of the Levi; beta is given over the Levi's simple roots.
inline std::int64_t kostant_partition(const LeviDatum& L, const RootCoords& beta) { return kostant_partition(L.sub, beta); }

// ---------------------------------------------------------------------------
// Formal characters

struct FormalCharacter {
    Weight base;
    int depth = 0;
    std::map<RootCoords, std::int64_t, ConeOrder> entries; // beta -> dim of weight base - beta

    std::int64_t at(const RootCoords& beta) const
    {
        auto it = entries.find(beta);
        return it == entries.end() ? 0 : it->second;
    }

    void set(const RootCoords& beta, std::int64_t v)
    {
        if (v == 0) {
            entries.erase(beta);
        } else {
            entries[beta] = v;
        }
    }

    /// Restriction to heights <= d.
    FormalCharacter truncated(int d) const
    {
        FormalCharacter out{base, std::min(d, depth), {}};
        for (const auto& [beta, v] : entries) {
            if (height(beta) <= out.depth) {
                out.entries.emplace(beta, v);
            }
        }
        return out;
    }

    friend bool operator==(const FormalCharacter& a, const FormalCharacter& b)
    {
        return a.base == b.base && a.depth == b.depth && a.entries == b.entries;
    }
};

/// Character of the Verma module of level n: n = 0 is the partition function, and each
/// further level convolves with it once more.
inline FormalCharacter verma_character(const RootDatum& d, const TruncatedWeight& v, int depth)
{
    if (depth < 0) {
        throw ContractError("negative depth");
    }
    const auto cone = cone_vectors(d.rank(), depth);
    std::map<RootCoords, std::int64_t, ConeOrder> level;
    for (const auto& beta : cone) {
        level[beta] = kostant_partition(d, beta);
    }
    for (int n = 1; n <= v.level(); ++n) {
        std::map<RootCoords, std::int64_t, ConeOrder> next;
        for (const auto& beta : cone) {
            std::int64_t s = 0;
            for (const auto& gamma : cone) {
                if (height(gamma) > height(beta)) {
                    break;
                }
                const RootCoords rest = beta - gamma;
                if (is_nonnegative(rest)) {
                    s += kostant_partition(d, gamma) * level.at(rest);
                }
            }
            next[beta] = s;
        }
        level = std::move(next);
    }
    FormalCharacter out{v.base(), depth, {}};
    for (const auto& [beta, c] : level) {
        out.set(beta, c);
    }
    return out;
}

/// Same character by direct count of PBW monomials in n+1 copies of the negative roots.
inline FormalCharacter verma_character_direct(const RootDatum& d, const TruncatedWeight& v, int depth)
{
    if (depth < 0) {
        throw ContractError("negative depth");
    }
    auto counter = partition_cache_for(d, v.level() + 1);
    FormalCharacter out{v.base(), depth, {}};
    for (const auto& beta : cone_vectors(d.rank(), depth)) {
        out.set(beta, counter->count(beta));
    }
    return out;
}

/// Returns ch L for the requested highest weight, truncated to at least the given depth.
using SimpleCharacterProvider = std::function<FormalCharacter(const TruncatedWeight&, int)>;

/// Greedy top-down decomposition of ch into simple characters of the block `label`.
/// Returns the multiplicity of each simple module whose highest weight is within the window.
/// A `seed` permutes the order among vectors of equal height.
inline std::map<Weight, std::int64_t> decompose_in_block(const RootDatum& d, const FormalCharacter& ch,
                                                         const BlockLabel& label,
                                                         const SimpleCharacterProvider& provider,
                                                         std::optional<unsigned> seed = std::nullopt)
{
    std::vector<RootCoords> order = cone_vectors(d.rank(), ch.depth);
    if (seed) {
        std::mt19937 rng(*seed);
        auto begin = order.begin();
        while (begin != order.end()) {
            const int h = height(*begin);
            auto end = std::find_if(begin, order.end(), [h](const RootCoords& b) { return height(b) != h; });
            std::shuffle(begin, end, rng);
            begin = end;
        }
    }
    std::map<RootCoords, std::int64_t, ConeOrder> residual(ch.entries.begin(), ch.entries.end());
    std::map<Weight, std::int64_t> out;
    for (const auto& beta : order) {
        auto it = residual.find(beta);
        const std::int64_t r = it == residual.end() ? 0 : it->second;
        if (r < 0) {
            throw InconsistencyError("negative residual " + std::to_string(r) + " at " + to_string(beta));
        }
        if (r == 0) {
            continue;
        }
        const Weight eta = ch.base - d.root_to_weight(beta);
        out[eta] = r;
        const int remaining = ch.depth - height(beta);
        const FormalCharacter simple = provider(label.with_base(eta), remaining);
        if (simple.depth < remaining) {
            throw ContractError("simple character provider returned too shallow a character");
        }
        for (const auto& [gamma, c] : simple.entries) {
            if (height(gamma) > remaining) {
                continue;
            }
            residual[beta + gamma] -= r * c;
        }
    }
    for (const auto& [beta, r] : residual) {
        if (r != 0) {
            throw InconsistencyError("residual " + std::to_string(r) + " left at " + to_string(beta));
        }
    }
    return out;
}

} // namespace trunco
