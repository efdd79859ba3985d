#pragma once

// Kazhdan-Lusztig polynomials and BGG category O multiplicities (the level-0 case).

#include <cstdint>
#include <fstream>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "json.hpp"
#include "trunco/root_datum.hpp"

namespace trunco {

struct KLPolynomial {
    std::vector<std::int64_t> coeffs; // coefficient of q^k at index k; empty is zero

    bool is_zero() const { return coeffs.empty(); }
    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
    std::int64_t at(std::size_t k) const { return k < coeffs.size() ? coeffs[k] : 0; }
    std::int64_t at_one() const
    {
        std::int64_t s = 0;
        for (auto c : coeffs) {
            s += c;
        }
        return s;
    }

    void trim()
    {
        while (!coeffs.empty() && coeffs.back() == 0) {
            coeffs.pop_back();
        }
    }

    /// Adds c q^shift p.
    void add_shifted(const KLPolynomial& p, std::size_t shift, std::int64_t c)
    {
        if (p.coeffs.size() + shift > coeffs.size()) {
            coeffs.resize(p.coeffs.size() + shift, 0);
        }
        for (std::size_t k = 0; k < p.coeffs.size(); ++k) {
            coeffs[k + shift] += c * p.coeffs[k];
        }
    }

    /// "1+q+2q^2"; "0" for the zero polynomial.
    std::string str() const
    {
        std::string out;
        for (std::size_t k = 0; k < coeffs.size(); ++k) {
            const auto c = coeffs[k];
            if (c == 0) {
                continue;
            }
            if (!out.empty()) {
                out += c > 0 ? "+" : "-";
            } else if (c < 0) {
                out += "-";
            }
            const auto a = c < 0 ? -c : c;
            if (k == 0) {
                out += std::to_string(a);
                continue;
            }
            if (a != 1) {
                out += std::to_string(a);
            }
            out += k == 1 ? "q" : "q^" + std::to_string(k);
        }
        return out.empty() ? "0" : out;
    }

    friend bool operator==(const KLPolynomial& a, const KLPolynomial& b) { return a.coeffs == b.coeffs; }
};

/// Memoized P_{x,y} over a materialized Weyl group (elements addressed by index).
class KLTable {
public:
    explicit KLTable(std::shared_ptr<const WeylGroup> group) : group_(std::move(group)) {}

    const WeylGroup& group() const { return *group_; }

    KLPolynomial polynomial(std::size_t x, std::size_t y) const
    {
        std::lock_guard<std::recursive_mutex> lock(mutex_);
        return compute(x, y);
    }

    /// Coefficient of q^{(l(y)-l(x)-1)/2} in P_{x,y} (zero unless x < y with odd length gap).
    std::int64_t mu(std::size_t x, std::size_t y) const
    {
        std::lock_guard<std::recursive_mutex> lock(mutex_);
        return mu_locked(x, y);
    }

    std::size_t cached_pairs() const
    {
        std::lock_guard<std::recursive_mutex> lock(mutex_);
        return memo_.size();
    }

    nlohmann::json to_json() const
    {
        std::lock_guard<std::recursive_mutex> lock(mutex_);
        nlohmann::json entries = nlohmann::json::array();
        std::map<std::uint64_t, const KLPolynomial*> ordered;
        for (const auto& [k, p] : memo_) {
            ordered[k] = &p;
        }
        const auto n = group_->size();
        for (const auto& [k, p] : ordered) {
            entries.push_back({k / n, k % n, p->coeffs});
        }
        return {{"datum", group_->datum().key()}, {"order", n}, {"entries", entries}};
    }

    /// Loads entries written by to_json; documents for another datum are ignored.
    bool load_json(const nlohmann::json& doc)
    {
        if (!doc.is_object() || doc.value("datum", std::string{}) != group_->datum().key() ||
            doc.value("order", std::size_t{0}) != group_->size()) {
            return false;
        }
        std::lock_guard<std::recursive_mutex> lock(mutex_);
        for (const auto& e : doc.at("entries")) {
            const auto x = e.at(0).get<std::size_t>();
            const auto y = e.at(1).get<std::size_t>();
            if (x >= group_->size() || y >= group_->size()) {
                throw ParseError("KL cache entry out of range");
            }
            KLPolynomial p;
            p.coeffs = e.at(2).get<std::vector<std::int64_t>>();
            memo_[key(x, y)] = std::move(p);
        }
        return true;
    }

private:
    std::uint64_t key(std::size_t x, std::size_t y) const { return static_cast<std::uint64_t>(x) * group_->size() + y; }

    std::int64_t mu_locked(std::size_t x, std::size_t y) const
    {
        const int gap = group_->length(y) - group_->length(x);
        if (gap <= 0 || gap % 2 == 0) {
            return 0;
        }
        return compute(x, y).at(static_cast<std::size_t>((gap - 1) / 2));
    }

    const KLPolynomial& compute(std::size_t x, std::size_t y) const
    {
        const auto k = key(x, y);
        if (auto it = memo_.find(k); it != memo_.end()) {
            return it->second;
        }
        const WeylGroup& W = *group_;
        KLPolynomial p;
        if (!W.bruhat_leq(x, y)) {
            // zero
        } else if (x == y) {
            p.coeffs = {1};
        } else {
            const int s = W.element(y).word().front();
            const std::size_t v = W.left(s, y);
            const std::size_t sx = W.left(s, x);
            if (W.length(sx) < W.length(x)) {
                // P_{x,y} = P_{sx,y} whenever s is a left descent of y
                p = compute(sx, y);
            } else {
                // x < sx: P_{x,y} = q P_{sx,v} + P_{x,v} - sum_z mu(z,v) q^{(l(y)-l(z))/2} P_{x,z}
                p.add_shifted(compute(sx, v), 1, 1);
                p.add_shifted(compute(x, v), 0, 1);
                for (std::size_t z = 0; z < W.size(); ++z) {
                    if (z == v || !W.left_descent(s, z) || !W.bruhat_leq(x, z) || !W.bruhat_leq(z, v)) {
                        continue;
                    }
                    const auto m = mu_locked(z, v);
                    if (m == 0) {
                        continue;
                    }
                    p.add_shifted(compute(x, z), static_cast<std::size_t>((W.length(y) - W.length(z)) / 2), -m);
                }
                p.trim();
            }
        }
        return memo_.emplace(k, std::move(p)).first->second;
    }

    std::shared_ptr<const WeylGroup> group_;
    mutable std::recursive_mutex mutex_;
    mutable std::unordered_map<std::uint64_t, KLPolynomial> memo_;
};

namespace detail {

struct KLRegistry {
    std::mutex mutex;
    std::map<std::string, std::shared_ptr<const WeylGroup>> groups;
    std::map<std::string, std::shared_ptr<KLTable>> tables;
};

inline KLRegistry& kl_registry()
{
    static KLRegistry r;
    return r;
}

} // namespace detail

/// Shared materialized Weyl group for a datum.
inline std::shared_ptr<const WeylGroup> weyl_group_for(const RootDatum& d)
{
    auto& reg = detail::kl_registry();
    std::lock_guard<std::mutex> lock(reg.mutex);
    auto& slot = reg.groups[d.key()];
    if (!slot) {
        slot = std::make_shared<const WeylGroup>(d);
    }
    return slot;
}

/// Shared KL memo table for a datum.
inline std::shared_ptr<KLTable> kl_table_for(const RootDatum& d)
{
    auto group = weyl_group_for(d);
    auto& reg = detail::kl_registry();
    std::lock_guard<std::mutex> lock(reg.mutex);
    auto& slot = reg.tables[d.key()];
    if (!slot) {
        slot = std::make_shared<KLTable>(group);
    }
    return slot;
}

/// Every KL table created so far in this process.
inline std::vector<std::shared_ptr<KLTable>> all_kl_tables()
{
    auto& reg = detail::kl_registry();
    std::lock_guard<std::mutex> lock(reg.mutex);
    std::vector<std::shared_ptr<KLTable>> out;
    for (auto& [k, t] : reg.tables) {
        out.push_back(t);
    }
    return out;
}

inline KLPolynomial kl_polynomial(const WeylElement& x, const WeylElement& y)
{
    if (x.datum().key() != y.datum().key()) {
        throw ContractError("KL polynomial of elements from different Weyl groups");
    }
    auto table = kl_table_for(x.datum());
    return table->polynomial(table->group().index_of(x), table->group().index_of(y));
}

// ---------------------------------------------------------------------------
// Level-0 multiplicities

/// Roots alpha with <lambda0 + rho, alpha^vee> integral, with their own simple system.
struct IntegralSubsystem {
    RootDatum datum;                   // Cartan matrix <beta_j, beta_i^vee> of the simple system below
    std::vector<RootCoords> simple;    // ambient coordinates of its simple roots
    std::vector<RootCoords> positive;  // ambient coordinates of its positive roots
};

inline IntegralSubsystem integral_subsystem(const RootDatum& d, const Weight& lambda0)
{
    IntegralSubsystem out;
    const Weight v = lambda0 + d.rho();
    for (const auto& beta : d.positive_roots()) {
        if (is_integer(d.pair(v, beta))) {
            out.positive.push_back(beta);
        }
    }
    // indecomposable elements of the positive integral roots
    std::map<RootCoords, bool> in_set;
    for (const auto& b : out.positive) {
        in_set[b] = true;
    }
    for (const auto& b : out.positive) {
        bool decomposable = false;
        for (const auto& a : out.positive) {
            if (height(a) >= height(b)) {
                break;
            }
            const RootCoords rest = b - a;
            if (is_nonnegative(rest) && in_set.count(rest)) {
                decomposable = true;
                break;
            }
        }
        if (!decomposable) {
            out.simple.push_back(b);
        }
    }
    const std::size_t k = out.simple.size();
    IntMatrix a(k, std::vector<int>(k));
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) {
            const Rational p = d.pair(d.root_to_weight(out.simple[j]), out.simple[i]);
            a[i][j] = static_cast<int>(p.get_num().get_si());
        }
    }
    out.datum = RootDatum::from_cartan_matrix(std::move(a));
    return out;
}

/// How a level-0 multiplicity was evaluated.
struct BlockDescriptor {
    IntegralSubsystem integral;
    std::vector<Rational> antidominant;   // <lambda^- + rho, beta_i^vee> over the integral simple roots
    std::vector<int> stabilizer;          // simple reflections (of the integral system) fixing lambda^-
    std::vector<int> verma_word;          // x with lambda0 = x . lambda^-
    std::vector<int> simple_word;         // y with nu0 = y . lambda^-
    std::vector<int> kl_x;                // KL pair actually evaluated, P_{kl_x, kl_y}
    std::vector<int> kl_y;
    KLPolynomial polynomial;
    std::int64_t value = 0;
    std::string note;
};

namespace detail {

// Reduces y-coordinates (pairings of a rho-shifted weight with the simple coroots)
// to the antidominant chamber, returning w with original = w(result).
inline std::vector<int> to_antidominant(const RootDatum& sub, std::vector<Rational>& y)
{
    std::vector<int> word;
    const int r = sub.rank();
    while (true) {
        int found = -1;
        for (int i = 0; i < r; ++i) {
            if (y[static_cast<std::size_t>(i)] > 0) {
                found = i;
                break;
            }
        }
        if (found < 0) {
            return word;
        }
        word.push_back(found);
        const Rational yi = y[static_cast<std::size_t>(found)];
        for (int j = 0; j < r; ++j) {
            y[static_cast<std::size_t>(j)] -= yi * sub.cartan(j, found);
        }
    }
}

inline WeylElement coset_extreme(const WeylElement& w, const std::vector<int>& S, bool longest)
{
    WeylElement cur = w;
    bool changed = true;
    while (changed) {
        changed = false;
        for (int s : S) {
            if (cur.has_right_descent(s) != longest) {
                cur = cur * WeylElement::simple(cur.datum(), s);
                changed = true;
            }
        }
    }
    return cur;
}

} // namespace detail

/// [M_{lambda0} : L_{nu0}] in BGG category O, with the evaluation record.
///
/// With lambda^- antidominant, lambda0 = x . lambda^- and nu0 = y . lambda^- in the
/// integral Weyl group, the value is P_{w0 x, w0 y}(1) where y is the shortest element
/// of y W_S (W_S the dot-stabilizer of lambda^-).
inline BlockDescriptor base_multiplicity_record(const RootDatum& d, const Weight& lambda0, const Weight& nu0)
{
    BlockDescriptor rec;
    if (lambda0 == nu0) {
        rec.value = 1;
        rec.polynomial.coeffs = {1};
        rec.note = "equal weights";
        return rec;
    }
    if (!dominance_leq(d, nu0, lambda0)) {
        rec.note = "not below in dominance order";
        return rec;
    }
    rec.integral = integral_subsystem(d, lambda0);
    const auto& sub = rec.integral.datum;
    // nu0 - lambda0 must lie in the span of the integral roots
    const auto diff = d.to_root_basis(nu0 - lambda0);
    {
        RationalMatrix span(static_cast<std::size_t>(d.rank()), rec.integral.simple.size());
        for (std::size_t j = 0; j < rec.integral.simple.size(); ++j) {
            for (int i = 0; i < d.rank(); ++i) {
                span(static_cast<std::size_t>(i), j) = rec.integral.simple[j][static_cast<std::size_t>(i)];
            }
        }
        if (!span.solve(diff)) {
            rec.note = "different integral Weyl group orbit";
            return rec;
        }
    }
    auto coords = [&](const Weight& w) {
        const Weight v = w + d.rho();
        std::vector<Rational> y;
        for (const auto& b : rec.integral.simple) {
            y.push_back(d.pair(v, b));
        }
        return y;
    };
    std::vector<Rational> yl = coords(lambda0);
    std::vector<Rational> yn = coords(nu0);
    auto xw = detail::to_antidominant(sub, yl);
    auto yw = detail::to_antidominant(sub, yn);
    if (yl != yn) {
        rec.note = "different integral Weyl group orbit";
        return rec;
    }
    rec.antidominant = yl;
    for (int i = 0; i < sub.rank(); ++i) {
        if (yl[static_cast<std::size_t>(i)] == 0) {
            rec.stabilizer.push_back(i);
        }
    }
    const WeylElement x = WeylElement::from_word(sub, xw);
    const WeylElement y = detail::coset_extreme(WeylElement::from_word(sub, yw), rec.stabilizer, false);
    rec.verma_word = x.word();
    rec.simple_word = y.word();
    auto table = kl_table_for(sub);
    const WeylGroup& W = table->group();
    const WeylElement& w0 = W.element(W.longest());
    const WeylElement a = w0 * x;
    const WeylElement b = w0 * y;
    rec.kl_x = a.word();
    rec.kl_y = b.word();
    rec.polynomial = table->polynomial(W.index_of(a), W.index_of(b));
    rec.value = rec.polynomial.at_one();
    rec.note = "KL evaluation";
    return rec;
}

inline std::int64_t base_multiplicity(const RootDatum& d, const Weight& lambda0, const Weight& nu0)
{
    return base_multiplicity_record(d, lambda0, nu0).value;
}

/// Writes every KL table of this process to `dir`/kl-<hash>.json.
inline void save_kl_cache(const std::string& dir)
{
    for (const auto& t : all_kl_tables()) {
        const auto name = dir + "/kl-" + std::to_string(std::hash<std::string>{}(t->group().datum().key())) + ".json";
        std::ofstream out(name);
        if (out) {
            out << t->to_json().dump();
        }
    }
}

/// Preloads the KL table of `d` from `dir`, if a matching file exists.
inline void load_kl_cache(const std::string& dir, const RootDatum& d)
{
    const auto name = dir + "/kl-" + std::to_string(std::hash<std::string>{}(d.key())) + ".json";
    std::ifstream in(name);
    if (!in) {
        return;
    }
    try {
        kl_table_for(d)->load_json(nlohmann::json::parse(in));
    } catch (const nlohmann::json::exception&) {
        // unreadable cache files are ignored
    }
}

} // namespace trunco
