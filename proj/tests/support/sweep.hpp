#pragma once

// Engine-versus-oracle sweep over small truncated current algebras.

#include <string>
#include <vector>

#include "trunco/engine.hpp"
#include "trunco/oracle.hpp"

namespace trunco::check {

struct SweepFamily {
    std::string type;
    std::vector<std::vector<Weight>> tails; // components 1..n of the block label
    std::string description;
};

struct SweepMismatch {
    std::string type;
    TruncatedWeight lambda;
    TruncatedWeight nu;
    std::int64_t engine = 0;
    std::int64_t oracle = 0;
};

struct SweepResult {
    std::size_t cases = 0;
    std::size_t nonzero = 0;
    std::vector<SweepMismatch> mismatches;
    std::vector<std::string> linkage_failures;
};

inline Weight half_weight(std::vector<Rational> v) { return Weight(std::move(v)); }

/// A1 with n in {1, 2} and A2 with n = 1; tails regular, zero, standard-singular and twisted.
inline std::vector<SweepFamily> default_families()
{
    std::vector<SweepFamily> out;
    out.push_back({"A1", {{Weight{1}}}, "A1 n=1 regular"});
    out.push_back({"A1", {{Weight{0}}}, "A1 n=1 zero"});
    out.push_back({"A1", {{half_weight({Rational(1, 2)})}}, "A1 n=1 regular non-integral"});
    out.push_back({"A1", {{Weight{0}, Weight{2}}}, "A1 n=2 regular"});
    out.push_back({"A1", {{Weight{0}, Weight{0}}}, "A1 n=2 zero"});
    out.push_back({"A1", {{Weight{3}, Weight{0}}}, "A1 n=2 zero top, nonzero middle"});
    out.push_back({"A2", {{Weight{1, 1}}}, "A2 n=1 regular"});
    out.push_back({"A2", {{Weight{0, 0}}}, "A2 n=1 zero"});
    out.push_back({"A2", {{Weight{1, 0}}}, "A2 n=1 standard-singular"});
    out.push_back({"A2", {{Weight{0, 2}}}, "A2 n=1 standard-singular"});
    out.push_back({"A2", {{Weight{1, -1}}}, "A2 n=1 twisted"});
    out.push_back({"A2", {{Weight{-2, 2}}}, "A2 n=1 twisted"});
    return out;
}

/// lambda_0 - nu_0 lies in the rational span of the Levi roots reached by the first twist.
inline bool linkage_holds(const RootDatum& d, const TruncatedWeight& lambda, const TruncatedWeight& nu)
{
    const auto t = find_twisting_word(d, lambda.top());
    const auto lt = n_dot(t.w, lambda);
    const auto nt = n_dot(t.w, nu);
    const auto gap = d.to_root_basis(lt.base() - nt.base());
    for (std::size_t i = 0; i < gap.size(); ++i) {
        if (gap[i] != 0 && !t.levi.contains(static_cast<int>(i))) {
            return false;
        }
    }
    return true;
}

inline SweepResult run_sweep(const std::vector<SweepFamily>& families, int base_max, int depth)
{
    SweepResult out;
    for (const auto& fam : families) {
        const RootDatum d = build_root_datum(fam.type);
        SimpleCharacterCache cache(d);
        Engine engine;
        for (const auto& tail : fam.tails) {
            std::vector<Weight> bases;
            for (int a = 0; a <= base_max; ++a) {
                if (d.rank() == 1) {
                    bases.push_back(Weight{a});
                    continue;
                }
                for (int b = 0; b <= base_max; ++b) {
                    bases.push_back(Weight{a, b});
                }
            }
            for (const auto& lam0 : bases) {
                std::vector<Weight> comps{lam0};
                comps.insert(comps.end(), tail.begin(), tail.end());
                const TruncatedWeight lambda(comps);
                const auto oracle = oracle_decomposition(d, lambda, depth, cache);
                for (const auto& beta : cone_vectors(d.rank(), depth)) {
                    const TruncatedWeight nu = lambda.with_base(lam0 - d.root_to_weight(beta));
                    const std::int64_t e = engine.multiplicity(d, lambda, nu);
                    auto it = oracle.find(nu.base());
                    const std::int64_t o = it == oracle.end() ? 0 : it->second;
                    ++out.cases;
                    if (e != o) {
                        out.mismatches.push_back({fam.type, lambda, nu, e, o});
                    }
                    if (o != 0) {
                        ++out.nonzero;
                        if (!linkage_holds(d, lambda, nu)) {
                            out.linkage_failures.push_back(fam.type + " " + lambda.str() + " / " + nu.str());
                        }
                    }
                }
            }
        }
    }
    return out;
}

} // namespace trunco::check
