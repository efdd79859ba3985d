#pragma once

// Truncated weights (lambda_0, ..., lambda_n), Jordan-block labels, singular
// subsystems, standard Levi detection, minimal twisting words and the n-dot action.

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "trunco/kl.hpp"
#include "trunco/root_datum.hpp"

namespace trunco {

struct TruncatedWeight {
    std::vector<Weight> components;

    TruncatedWeight() = default;
    explicit TruncatedWeight(std::vector<Weight> c) : components(std::move(c)) {}

    int level() const { return static_cast<int>(components.size()) - 1; }
    std::size_t rank() const { return components.empty() ? 0 : components[0].size(); }
    Weight& operator[](std::size_t i) { return components[i]; }
    const Weight& operator[](std::size_t i) const { return components[i]; }
    const Weight& base() const { return components.front(); }
    const Weight& top() const { return components.back(); }

    /// (lambda_0, ..., lambda_{n-1}).
    TruncatedWeight truncated() const
    {
        if (components.size() < 2) {
            throw ContractError("cannot drop the last component of a level-0 weight");
        }
        return TruncatedWeight(std::vector<Weight>(components.begin(), components.end() - 1));
    }

    /// Same components with lambda_0 replaced.
    TruncatedWeight with_base(Weight b) const
    {
        TruncatedWeight out = *this;
        out.components[0] = std::move(b);
        return out;
    }

    std::string str() const
    {
        std::string out;
        for (std::size_t i = 0; i < components.size(); ++i) {
            out += (i ? "," : "") + components[i].str();
        }
        return out;
    }

    friend bool operator==(const TruncatedWeight& a, const TruncatedWeight& b) { return a.components == b.components; }
    friend bool operator!=(const TruncatedWeight& a, const TruncatedWeight& b) { return !(a == b); }
    friend bool operator<(const TruncatedWeight& a, const TruncatedWeight& b) { return a.components < b.components; }
};

/// The tail (lambda_1, ..., lambda_n) labelling a Jordan block.
struct BlockLabel {
    std::vector<Weight> tail;

    static BlockLabel of(const TruncatedWeight& w)
    {
        return BlockLabel{std::vector<Weight>(w.components.begin() + 1, w.components.end())};
    }
    TruncatedWeight with_base(Weight b) const
    {
        std::vector<Weight> c{std::move(b)};
        c.insert(c.end(), tail.begin(), tail.end());
        return TruncatedWeight(std::move(c));
    }
    friend bool operator==(const BlockLabel& a, const BlockLabel& b) { return a.tail == b.tail; }
};

/// A standard Levi subalgebra: simple roots J and the root datum they generate.
struct LeviDatum {
    std::vector<int> J;
    RootDatum sub;

    static LeviDatum of(const RootDatum& d, std::vector<int> J)
    {
        std::sort(J.begin(), J.end());
        RootDatum sub = d.sub_datum(J);
        return LeviDatum{std::move(J), std::move(sub)};
    }

    bool contains(int i) const { return std::find(J.begin(), J.end(), i) != J.end(); }

    /// Coordinates at the indices J.
    Weight project(const Weight& v) const
    {
        Weight out;
        for (int j : J) {
            out.coords.push_back(v[static_cast<std::size_t>(j)]);
        }
        return out;
    }

    TruncatedWeight project(const TruncatedWeight& v) const
    {
        TruncatedWeight out;
        for (const auto& c : v.components) {
            out.components.push_back(project(c));
        }
        return out;
    }

    RootCoords project(const RootCoords& beta) const
    {
        RootCoords out;
        for (int j : J) {
            out.push_back(beta[static_cast<std::size_t>(j)]);
        }
        return out;
    }

    /// Ambient root coordinates of a Levi root.
    RootCoords embed(const RootCoords& beta, std::size_t ambient_rank) const
    {
        RootCoords out(ambient_rank, 0);
        for (std::size_t k = 0; k < J.size(); ++k) {
            out[static_cast<std::size_t>(J[k])] = beta[k];
        }
        return out;
    }
};

inline bool dominance_leq(const RootDatum& d, const Weight& lo, const Weight& hi, const LeviDatum& L)
{
    return dominance_leq(d, lo, hi, L.J);
}

/// {alpha in Phi : <nu, alpha^vee> = 0}: positive roots first, then their negatives.
inline std::vector<RootCoords> singular_roots(const RootDatum& d, const Weight& nu)
{
    std::vector<RootCoords> pos;
    for (const auto& beta : d.positive_roots()) {
        if (d.pair(nu, beta) == 0) {
            pos.push_back(beta);
        }
    }
    std::vector<RootCoords> out = pos;
    for (const auto& beta : pos) {
        out.push_back(negated(beta));
    }
    return out;
}

/// The Levi generated by the simple members of `roots`, if that generates all of them.
inline std::optional<LeviDatum> standard_levi(const RootDatum& d, const std::vector<RootCoords>& roots)
{
    std::vector<int> J;
    for (int i = 0; i < d.rank(); ++i) {
        RootCoords e(static_cast<std::size_t>(d.rank()), 0);
        e[static_cast<std::size_t>(i)] = 1;
        if (std::find(roots.begin(), roots.end(), e) != roots.end()) {
            J.push_back(i);
        }
    }
    // Phi_J^+ is exactly the positive roots supported on J; compare with the positive members.
    for (const auto& beta : roots) {
        if (!is_nonnegative(beta)) {
            continue;
        }
        for (int i = 0; i < d.rank(); ++i) {
            if (beta[static_cast<std::size_t>(i)] != 0 && std::find(J.begin(), J.end(), i) == J.end()) {
                return std::nullopt;
            }
        }
    }
    std::size_t count_pos = 0;
    for (const auto& beta : roots) {
        count_pos += is_nonnegative(beta) ? 1 : 0;
    }
    LeviDatum L = LeviDatum::of(d, J);
    if (L.sub.num_positive_roots() != count_pos) {
        return std::nullopt;
    }
    return L;
}

struct TwistingResult {
    WeylElement w;
    LeviDatum levi;
    /// <(s_{a_{i-1}} ... s_{a_1}) mu, alpha_{a_i}^vee> != 0 along the word, applied right to left.
    bool nonvanishing_along_word = true;
};

inline bool nonvanishing_along_word(const WeylElement& w, Weight mu)
{
    const RootDatum& d = w.datum();
    const auto& word = w.word();
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
        const auto i = static_cast<std::size_t>(*it);
        if (mu[i] == 0) {
            return false;
        }
        mu -= mu[i] * d.simple_root(*it);
    }
    return true;
}

/// All w of minimal length with Phi_{w(mu)} in standard Levi form, in lexicographic
/// order of their lexicographically first reduced words.
inline std::vector<TwistingResult> minimal_twisting_words(const RootDatum& d, const Weight& mu)
{
    auto group = weyl_group_for(d);
    std::vector<TwistingResult> out;
    int found_length = -1;
    for (std::size_t k = 0; k < group->size(); ++k) {
        const WeylElement& w = group->element(k);
        if (found_length >= 0 && w.length() > found_length) {
            break;
        }
        const Weight image = w.act(mu);
        auto levi = standard_levi(d, singular_roots(d, image));
        if (!levi) {
            continue;
        }
        found_length = w.length();
        out.push_back(TwistingResult{w, std::move(*levi), nonvanishing_along_word(w, mu)});
    }
    if (out.empty()) {
        throw InternalError("no Weyl group element puts " + mu.str() + " in standard Levi form");
    }
    return out;
}

enum class TieBreak { First, Last };

/// Minimal-length w with Phi_{w(mu)} standard; ties go to the lexicographically first word.
inline TwistingResult find_twisting_word(const RootDatum& d, const Weight& mu, TieBreak tie = TieBreak::First)
{
    auto all = minimal_twisting_words(d, mu);
    return tie == TieBreak::First ? all.front() : all.back();
}

/// Shift c in w .n lambda_0 = w(lambda_0 + c rho) - c rho at truncation level n.
inline int dot_shift(int level) { return level + 1; }

/// Component 0 by w(lambda_0 + c rho) - c rho with c = dot_shift(n); components >= 1 by w.
inline TruncatedWeight n_dot(const WeylElement& w, const TruncatedWeight& v)
{
    const RootDatum& d = w.datum();
    const Rational c = dot_shift(v.level());
    TruncatedWeight out = v;
    const Weight shift = c * d.rho();
    out[0] = w.act(v[0] + shift) - shift;
    for (std::size_t i = 1; i < v.components.size(); ++i) {
        out[i] = w.act(v[i]);
    }
    return out;
}

inline bool same_block(const TruncatedWeight& a, const TruncatedWeight& b)
{
    if (a.components.size() != b.components.size()) {
        throw ContractError("same_block on weights of different levels");
    }
    return std::equal(a.components.begin() + 1, a.components.end(), b.components.begin() + 1);
}

/// True iff lambda_0 - lambda'_0 lies in the rational span of Phi_L.
inline bool linked(const RootDatum& d, const TruncatedWeight& a, const TruncatedWeight& b, const LeviDatum& L)
{
    if (!same_block(a, b)) {
        throw ContractError("linked() requires weights in the same block");
    }
    if (a.level() >= 1) {
        auto sing = standard_levi(d, singular_roots(d, a.top()));
        if (!sing || sing->J != L.J) {
            throw ContractError("linked() requires Phi_{lambda_n} to be the given standard Levi");
        }
    }
    const auto coeffs = d.to_root_basis(a[0] - b[0]);
    for (int i = 0; i < d.rank(); ++i) {
        if (!L.contains(i) && coeffs[static_cast<std::size_t>(i)] != 0) {
            return false;
        }
    }
    return true;
}

/// Componentwise v + delta, where every delta_i vanishes on the coroots of L.
inline TruncatedWeight central_shift(const TruncatedWeight& v, const TruncatedWeight& delta, const LeviDatum& L)
{
    if (v.components.size() != delta.components.size()) {
        throw ContractError("central shift of a different level");
    }
    TruncatedWeight out = v;
    for (std::size_t i = 0; i < delta.components.size(); ++i) {
        for (int j : L.J) {
            if (delta[i][static_cast<std::size_t>(j)] != 0) {
                throw ContractError("shift does not vanish on the Levi coroots");
            }
        }
        out[i] += delta[i];
    }
    return out;
}

} // namespace trunco
