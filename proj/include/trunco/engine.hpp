#pragma once

// Composition multiplicities [M_Lambda : L_N] over g_n by reduction to a Levi
// subalgebra one level down, bottoming out in KL evaluations at level 0.

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "trunco/characters.hpp"
#include "trunco/kl.hpp"
#include "trunco/root_datum.hpp"
#include "trunco/trunc_weights.hpp"

namespace trunco {

struct TraceNode;
using TracePtr = std::shared_ptr<const TraceNode>;

struct TraceTerm {
    RootCoords gamma;            // over the Levi's simple roots
    std::int64_t partition = 0;  // Levi partition function at gamma
    std::int64_t child_value = 0;
    TracePtr child;
};

enum class TraceKind { DifferentBlock, NotDominated, Equal, Base, NotLinked, Reduction };

inline const char* to_string(TraceKind k)
{
    switch (k) {
    case TraceKind::DifferentBlock: return "different Jordan block";
    case TraceKind::NotDominated: return "not below in dominance order";
    case TraceKind::Equal: return "equal weights";
    case TraceKind::Base: return "level 0";
    case TraceKind::NotLinked: return "not linked in the Levi";
    case TraceKind::Reduction: return "Levi reduction";
    }
    return "?";
}

struct TraceNode {
    RootDatum datum;
    TruncatedWeight lambda;
    TruncatedWeight nu;
    std::int64_t value = 0;
    TraceKind kind = TraceKind::Equal;

    // Reduction records
    std::vector<int> twist_word;
    bool twist_condition = true;
    std::vector<int> levi;
    TruncatedWeight lambda_twisted;
    TruncatedWeight nu_twisted;
    RootCoords gap; // lambda'_0 - nu'_0 over the ambient simple roots
    std::vector<TraceTerm> terms;

    // Level-0 record
    std::optional<BlockDescriptor> base;
};

struct EngineOptions {
    TieBreak tie = TieBreak::First;
    bool memoize = true;
};

class Engine {
public:
    explicit Engine(EngineOptions opts = {}) : opts_(opts) {}

    TracePtr multiplicity_trace(const RootDatum& d, const TruncatedWeight& lambda, const TruncatedWeight& nu)
    {
        if (lambda.components.empty() || lambda.components.size() != nu.components.size()) {
            throw ContractError("weights must have the same number of components");
        }
        for (const auto* w : {&lambda, &nu}) {
            for (const auto& c : w->components) {
                if (c.size() != static_cast<std::size_t>(d.rank())) {
                    throw ContractError("weight component of the wrong rank");
                }
            }
        }
        const std::string key = d.key() + "|" + lambda.str() + "|" + nu.str();
        if (opts_.memoize) {
            std::lock_guard<std::mutex> lock(mutex_);
            if (auto it = memo_.find(key); it != memo_.end()) {
                return it->second;
            }
        }
        TracePtr result = compute(d, lambda, nu);
        if (opts_.memoize) {
            std::lock_guard<std::mutex> lock(mutex_);
            result = memo_.emplace(key, result).first->second;
        }
        return result;
    }

    std::int64_t multiplicity(const RootDatum& d, const TruncatedWeight& lambda, const TruncatedWeight& nu)
    {
        return multiplicity_trace(d, lambda, nu)->value;
    }

    /// Nonzero [M_Lambda : L_{(lambda_0 - beta, tail)}] for ht(beta) <= depth.
    std::map<RootCoords, std::int64_t, ConeOrder> multiplicity_table(const RootDatum& d, const TruncatedWeight& lambda,
                                                                     int depth)
    {
        if (depth < 0) {
            throw ContractError("negative depth");
        }
        std::map<RootCoords, std::int64_t, ConeOrder> out;
        for (const auto& beta : cone_vectors(d.rank(), depth)) {
            const auto v = multiplicity(d, lambda, lambda.with_base(lambda.base() - d.root_to_weight(beta)));
            if (v != 0) {
                out[beta] = v;
            }
        }
        return out;
    }

    std::size_t memo_size() const
    {
        std::lock_guard<std::mutex> lock(mutex_);
        return memo_.size();
    }

private:
    TracePtr compute(const RootDatum& d, const TruncatedWeight& lambda, const TruncatedWeight& nu)
    {
        auto node = std::make_shared<TraceNode>();
        node->datum = d;
        node->lambda = lambda;
        node->nu = nu;
        if (!same_block(lambda, nu)) {
            node->kind = TraceKind::DifferentBlock;
            return node;
        }
        if (!dominance_leq(d, nu.base(), lambda.base())) {
            node->kind = TraceKind::NotDominated;
            return node;
        }
        if (lambda == nu) {
            node->kind = TraceKind::Equal;
            node->value = 1;
            return node;
        }
        if (lambda.level() == 0) {
            node->kind = TraceKind::Base;
            node->base = base_multiplicity_record(d, lambda.base(), nu.base());
            node->value = node->base->value;
            return node;
        }
        const TwistingResult tw = find_twisting_word(d, lambda.top(), opts_.tie);
        if (!tw.nonvanishing_along_word) {
            throw InternalError("minimal twisting word meets a vanishing pairing");
        }
        node->twist_word = tw.w.word();
        node->twist_condition = tw.nonvanishing_along_word;
        node->levi = tw.levi.J;
        node->lambda_twisted = n_dot(tw.w, lambda);
        node->nu_twisted = n_dot(tw.w, nu);
        const auto gap = dominance_gap(d, node->nu_twisted.base(), node->lambda_twisted.base());
        if (!gap || !supported_on(*gap, tw.levi)) {
            node->kind = TraceKind::NotLinked;
            return node;
        }
        node->kind = TraceKind::Reduction;
        node->gap = *gap;
        const LeviDatum& L = tw.levi;
        const RootCoords gap_j = L.project(*gap);
        // lambda_n is central in the Levi after twisting; the remaining levels live there.
        const TruncatedWeight lam_low = L.project(node->lambda_twisted.truncated());
        const TruncatedWeight nu_low = L.project(node->nu_twisted.truncated());
        for (const auto& gamma : cone_vectors(L.sub.rank(), height(gap_j))) {
            if (!is_nonnegative(gap_j - gamma)) {
                continue;
            }
            const std::int64_t p = kostant_partition(L, gamma);
            if (p == 0) {
                continue;
            }
            const TruncatedWeight shifted = lam_low.with_base(lam_low.base() - L.sub.root_to_weight(gamma));
            TracePtr child = multiplicity_trace(L.sub, shifted, nu_low);
            if (child->value == 0) {
                continue;
            }
            node->value += p * child->value;
            node->terms.push_back(TraceTerm{gamma, p, child->value, child});
        }
        return node;
    }

    static bool supported_on(const RootCoords& beta, const LeviDatum& L)
    {
        for (std::size_t i = 0; i < beta.size(); ++i) {
            if (beta[i] != 0 && !L.contains(static_cast<int>(i))) {
                return false;
            }
        }
        return true;
    }

    EngineOptions opts_;
    mutable std::mutex mutex_;
    std::map<std::string, TracePtr> memo_;
};

/// Recomputes every record of a trace from its inputs; returns a description of the
/// first disagreement, or nullopt when the trace is consistent.
inline std::optional<std::string> verify_trace(const TraceNode& node)
{
    const RootDatum& d = node.datum;
    auto fail = [&](const std::string& what) {
        return std::optional<std::string>(what + " at " + node.lambda.str() + " / " + node.nu.str());
    };
    switch (node.kind) {
    case TraceKind::DifferentBlock:
        if (same_block(node.lambda, node.nu) || node.value != 0) return fail("block record");
        return std::nullopt;
    case TraceKind::NotDominated:
        if (dominance_leq(d, node.nu.base(), node.lambda.base()) || node.value != 0) return fail("dominance record");
        return std::nullopt;
    case TraceKind::Equal:
        if (node.lambda != node.nu || node.value != 1) return fail("equality record");
        return std::nullopt;
    case TraceKind::Base:
        if (!node.base || base_multiplicity(d, node.lambda.base(), node.nu.base()) != node.value) return fail("level-0 record");
        return std::nullopt;
    case TraceKind::NotLinked:
    case TraceKind::Reduction: {
        const WeylElement w = WeylElement::from_word(d, node.twist_word);
        if (n_dot(w, node.lambda) != node.lambda_twisted || n_dot(w, node.nu) != node.nu_twisted) {
            return fail("twisted weights");
        }
        auto levi = standard_levi(d, singular_roots(d, node.lambda_twisted.top()));
        if (!levi || levi->J != node.levi) {
            return fail("Levi of the twisted weight");
        }
        if (!nonvanishing_along_word(w, node.lambda.top())) {
            return fail("pairing along the twisting word");
        }
        if (node.kind == TraceKind::NotLinked) {
            return node.value == 0 ? std::nullopt : fail("unlinked value");
        }
        const LeviDatum L = LeviDatum::of(d, node.levi);
        std::int64_t total = 0;
        for (const auto& t : node.terms) {
            if (!is_nonnegative(L.project(node.gap) - t.gamma)) return fail("term outside the dominance window");
            if (kostant_partition(L, t.gamma) != t.partition) return fail("partition value");
            if (!t.child || t.child->value != t.child_value) return fail("child value");
            if (auto bad = verify_trace(*t.child)) return bad;
            total += t.partition * t.child_value;
        }
        return total == node.value ? std::nullopt : fail("sum of contributions");
    }
    }
    return fail("unknown record");
}

} // namespace trunco
