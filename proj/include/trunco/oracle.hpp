#pragma once

// Brute-force ground truth. Chevalley basis of g and g_n, explicit Verma modules
// over g_n by PBW straightening, simple characters from raising nullspaces, and
// composition multiplicities by character decomposition.

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "trunco/characters.hpp"
#include "trunco/matrix.hpp"
#include "trunco/root_datum.hpp"
#include "trunco/trunc_weights.hpp"

namespace trunco {

using SparseIntVector = std::vector<std::pair<int, long>>;

/// Chevalley basis {e_a : a in Phi} u {h_j} of g with integer structure constants.
/// Index k < P is the positive root k, P <= k < 2P its negative, 2P + j is h_j.
class ChevalleyBasis {
public:
    explicit ChevalleyBasis(RootDatum d) : d_(std::move(d))
    {
        P_ = static_cast<int>(d_.num_positive_roots());
        r_ = d_.rank();
        for (int k = 0; k < P_; ++k) {
            signed_index_[d_.positive_roots()[static_cast<std::size_t>(k)]] = k;
            signed_index_[negated(d_.positive_roots()[static_cast<std::size_t>(k)])] = P_ + k;
        }
        build_structure_constants();
        const int n = dim();
        table_.assign(static_cast<std::size_t>(n), std::vector<SparseIntVector>(static_cast<std::size_t>(n)));
        for (int a = 0; a < n; ++a) {
            for (int b = 0; b < n; ++b) {
                table_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = compute_bracket(a, b);
            }
        }
        check_jacobi();
    }

    const RootDatum& datum() const { return d_; }
    int num_positive() const { return P_; }
    int dim() const { return 2 * P_ + r_; }
    bool is_root(int k) const { return k < 2 * P_; }
    bool is_positive(int k) const { return k < P_; }
    bool is_negative(int k) const { return k >= P_ && k < 2 * P_; }
    int h_index(int j) const { return 2 * P_ + j; }
    int e_index(int pos) const { return pos; }
    int f_index(int pos) const { return P_ + pos; }

    /// Signed root coordinates of basis element k (zero vector for h_j).
    RootCoords root(int k) const
    {
        if (k < P_) {
            return d_.positive_roots()[static_cast<std::size_t>(k)];
        }
        if (k < 2 * P_) {
            return negated(d_.positive_roots()[static_cast<std::size_t>(k - P_)]);
        }
        return RootCoords(static_cast<std::size_t>(r_), 0);
    }

    std::optional<int> index_of_root(const RootCoords& a) const
    {
        auto it = signed_index_.find(a);
        if (it == signed_index_.end()) {
            return std::nullopt;
        }
        return it->second;
    }

    const SparseIntVector& bracket(int a, int b) const
    {
        return table_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
    }

    /// N_{a,b} for roots a, b (signed indices) with a + b a root.
    long structure_constant(int a, int b) const { return N(root(a), root(b)); }

private:
    Rational len2(const RootCoords& a) const { return d_.inner(a, a); }

    long N(const RootCoords& a, const RootCoords& b) const
    {
        const bool pa = is_nonnegative(a);
        const bool pb = is_nonnegative(b);
        if (pa && pb) {
            auto it = n_pos_.find({a, b});
            if (it != n_pos_.end()) {
                return it->second;
            }
            it = n_pos_.find({b, a});
            if (it != n_pos_.end()) {
                return -it->second;
            }
            throw InternalError("missing structure constant for " + to_string(a) + "," + to_string(b));
        }
        if (!pa && !pb) {
            return -N(negated(a), negated(b));
        }
        // N_{a,b}/(c,c) = N_{b,c}/(a,a) = N_{c,a}/(b,b) with c = -(a+b)
        const RootCoords c = negated(a + b);
        const bool pc = is_nonnegative(c);
        Rational v;
        if (pa == pc) {
            // (c, a) is a same-sign pair
            v = len2(c) / len2(b) * N(c, a);
        } else {
            // (b, c) is a same-sign pair
            v = len2(c) / len2(a) * N(b, c);
        }
        if (!is_integer(v)) {
            throw InternalError("non-integral structure constant");
        }
        return v.get_num().get_si();
    }

    void build_structure_constants()
    {
        const auto& pos = d_.positive_roots();
        auto is_pos_root = [&](const RootCoords& b) { return d_.positive_root_index(b).has_value(); };
        auto is_any_root = [&](const RootCoords& b) { return signed_index_.count(b) > 0; };
        for (const auto& xi : pos) {
            if (height(xi) < 2) {
                continue;
            }
            std::vector<std::pair<RootCoords, RootCoords>> special;
            for (const auto& r : pos) {
                const RootCoords s = xi - r;
                if (is_nonnegative(s) && is_pos_root(s) && *d_.positive_root_index(r) < *d_.positive_root_index(s)) {
                    special.emplace_back(r, s);
                }
            }
            // extraspecial pair: the first r in the root order
            const auto [r1, s1] = special.front();
            int p = 0;
            for (RootCoords down = s1 - r1; is_any_root(down); down = down - r1) {
                ++p;
            }
            n_pos_[{r1, s1}] = p + 1;
            const long n1 = p + 1;
            const RootCoords t = negated(r1);
            const RootCoords u = negated(s1);
            for (std::size_t k = 1; k < special.size(); ++k) {
                const auto& [r, s] = special[k];
                Rational acc = 0;
                const RootCoords st = s + t;
                if (is_any_root(st)) {
                    acc += Rational(N(s, t) * N(r, u)) / len2(st);
                }
                const RootCoords tr = t + r;
                if (is_any_root(tr)) {
                    acc += Rational(N(t, r) * N(s, u)) / len2(tr);
                }
                const Rational v = len2(xi) / n1 * acc;
                if (!is_integer(v)) {
                    throw InternalError("non-integral structure constant");
                }
                n_pos_[{r, s}] = v.get_num().get_si();
            }
        }
    }

    SparseIntVector compute_bracket(int a, int b) const
    {
        const int hb = 2 * P_;
        if (a >= hb && b >= hb) {
            return {};
        }
        if (a >= hb || b >= hb) {
            const int h = (a >= hb ? a : b) - hb;
            const int e = a >= hb ? b : a;
            const RootCoords alpha = root(e);
            long pairing = 0;
            for (int k = 0; k < r_; ++k) {
                pairing += static_cast<long>(d_.cartan(h, k)) * alpha[static_cast<std::size_t>(k)];
            }
            if (pairing == 0) {
                return {};
            }
            return {{e, a >= hb ? pairing : -pairing}};
        }
        const RootCoords sum = root(a) + root(b);
        if (std::all_of(sum.begin(), sum.end(), [](int x) { return x == 0; })) {
            const int pos = a < P_ ? a : b;
            const long sign = a < P_ ? 1 : -1;
            SparseIntVector out;
            const auto& c = d_.coroot(static_cast<std::size_t>(pos));
            for (int j = 0; j < r_; ++j) {
                if (c[static_cast<std::size_t>(j)] != 0) {
                    out.emplace_back(hb + j, sign * c[static_cast<std::size_t>(j)]);
                }
            }
            return out;
        }
        auto idx = index_of_root(sum);
        if (!idx) {
            return {};
        }
        return {{*idx, N(root(a), root(b))}};
    }

    void check_jacobi() const
    {
        const int n = dim();
        auto bracket_vec = [&](int x, const SparseIntVector& v) {
            std::map<int, long> out;
            for (const auto& [k, c] : v) {
                for (const auto& [m, c2] : bracket(x, k)) {
                    out[m] += c * c2;
                }
            }
            return out;
        };
        for (int a = 0; a < n; ++a) {
            for (int b = 0; b < n; ++b) {
                // antisymmetry
                std::map<int, long> anti;
                for (const auto& [k, c] : bracket(a, b)) anti[k] += c;
                for (const auto& [k, c] : bracket(b, a)) anti[k] += c;
                for (const auto& [k, c] : anti) {
                    if (c != 0) {
                        throw InternalError("Chevalley basis is not antisymmetric");
                    }
                }
                for (int c = 0; c < n; ++c) {
                    // [a,[b,c]] + [b,[c,a]] + [c,[a,b]] = 0
                    std::map<int, long> total;
                    for (const auto& [k, v] : bracket_vec(a, bracket(b, c))) total[k] += v;
                    for (const auto& [k, v] : bracket_vec(b, bracket(c, a))) total[k] += v;
                    for (const auto& [k, v] : bracket_vec(c, bracket(a, b))) total[k] += v;
                    for (const auto& [k, v] : total) {
                        if (v != 0) {
                            throw InternalError("Chevalley basis violates the Jacobi identity");
                        }
                    }
                }
            }
        }
    }

    RootDatum d_;
    int P_ = 0;
    int r_ = 0;
    std::map<RootCoords, int> signed_index_;
    std::map<std::pair<RootCoords, RootCoords>, long> n_pos_;
    std::vector<std::vector<SparseIntVector>> table_;
};

inline std::shared_ptr<const ChevalleyBasis> chevalley_basis_for(const RootDatum& d)
{
    static std::mutex mutex;
    static std::map<std::string, std::shared_ptr<const ChevalleyBasis>> cache;
    std::lock_guard<std::mutex> lock(mutex);
    auto& slot = cache[d.key()];
    if (!slot) {
        slot = std::make_shared<const ChevalleyBasis>(d);
    }
    return slot;
}

// ---------------------------------------------------------------------------
// Verma modules over g_n

using Monomial = std::vector<int>; // nondecreasing f-codes, code = positive root index * (n+1) + degree
using ModuleVector = std::map<Monomial, Rational>;

/// M_Lambda over g_n restricted to weight spaces lambda_0 - beta with ht(beta) <= depth.
/// Generators of g_n are addressed as g-index * (n+1) + degree.
class TruncatedModule {
public:
    static constexpr std::size_t kDefaultBudget = 250000;

    TruncatedModule(const RootDatum& d, TruncatedWeight highest, int depth, std::size_t budget = kDefaultBudget)
        : basis_(chevalley_basis_for(d)), highest_(std::move(highest)), depth_(depth)
    {
        if (highest_.rank() != static_cast<std::size_t>(d.rank())) {
            throw ContractError("highest weight has the wrong rank");
        }
        if (depth_ < 0) {
            throw ContractError("negative depth");
        }
        n_ = highest_.level();
        enumerate(budget);
    }

    const RootDatum& datum() const { return basis_->datum(); }
    const ChevalleyBasis& chevalley() const { return *basis_; }
    const TruncatedWeight& highest() const { return highest_; }
    int depth() const { return depth_; }
    int level() const { return n_; }

    int generator(int g_index, int degree) const { return g_index * (n_ + 1) + degree; }
    int g_index(int gen) const { return gen / (n_ + 1); }
    int degree(int gen) const { return gen % (n_ + 1); }
    int num_generators() const { return basis_->dim() * (n_ + 1); }

    /// Weight (over the simple roots) by which a generator raises; negative for f's.
    RootCoords generator_weight(int gen) const { return basis_->root(g_index(gen)); }

    /// Monomials spanning the weight space lambda_0 - beta (empty outside the window).
    const std::vector<Monomial>& basis(const RootCoords& beta) const
    {
        static const std::vector<Monomial> empty;
        auto it = spaces_.find(beta);
        return it == spaces_.end() ? empty : it->second;
    }

    std::size_t dimension(const RootCoords& beta) const { return basis(beta).size(); }
    bool in_window(const RootCoords& beta) const { return is_nonnegative(beta) && height(beta) <= depth_; }

    std::vector<RootCoords> weights() const
    {
        std::vector<RootCoords> out;
        for (const auto& [beta, b] : spaces_) {
            out.push_back(beta);
        }
        std::sort(out.begin(), out.end(), ConeOrder{});
        return out;
    }

    /// x . m as a combination of PBW monomials.
    ModuleVector act(int gen, const Monomial& m) const
    {
        std::lock_guard<std::recursive_mutex> lock(mutex_);
        return act_locked(gen, m);
    }

    /// Matrix of a generator from the weight space at beta to its image weight space.
    RationalMatrix matrix(int gen, const RootCoords& beta) const
    {
        const RootCoords target = beta - generator_weight(gen);
        const auto& src = basis(beta);
        if (!in_window(target)) {
            return RationalMatrix(0, src.size());
        }
        const auto& dst = basis(target);
        std::map<Monomial, std::size_t> row;
        for (std::size_t i = 0; i < dst.size(); ++i) {
            row[dst[i]] = i;
        }
        RationalMatrix out(dst.size(), src.size());
        for (std::size_t c = 0; c < src.size(); ++c) {
            for (const auto& [mono, coeff] : act(gen, src[c])) {
                auto it = row.find(mono);
                if (it == row.end()) {
                    throw InternalError("PBW straightening left the target weight space");
                }
                out(it->second, c) = coeff;
            }
        }
        return out;
    }

    RootCoords monomial_weight(const Monomial& m) const
    {
        RootCoords beta(static_cast<std::size_t>(datum().rank()), 0);
        for (int c : m) {
            beta = beta + datum().positive_roots()[static_cast<std::size_t>(c / (n_ + 1))];
        }
        return beta;
    }

private:
    bool is_f(int gen) const { return basis_->is_negative(g_index(gen)); }
    int f_code(int gen) const { return (g_index(gen) - basis_->num_positive()) * (n_ + 1) + degree(gen); }
    int gen_of_code(int code) const { return generator(basis_->f_index(code / (n_ + 1)), code % (n_ + 1)); }

    static void add_into(ModuleVector& acc, const ModuleVector& v, const Rational& c)
    {
        for (const auto& [m, x] : v) {
            auto& slot = acc[m];
            slot += c * x;
            if (slot == 0) {
                acc.erase(m);
            }
        }
    }

    ModuleVector act_locked(int gen, const Monomial& m) const
    {
        Monomial key;
        key.reserve(m.size() + 1);
        key.push_back(gen);
        key.insert(key.end(), m.begin(), m.end());
        if (auto it = memo_.find(key); it != memo_.end()) {
            return it->second;
        }
        ModuleVector out;
        const int gi = g_index(gen);
        if (is_f(gen) && (m.empty() || f_code(gen) <= m.front())) {
            Monomial prefixed{f_code(gen)};
            prefixed.insert(prefixed.end(), m.begin(), m.end());
            out[prefixed] = 1;
        } else if (m.empty()) {
            if (!basis_->is_root(gi)) {
                const int j = gi - 2 * basis_->num_positive();
                const Rational& value = highest_[static_cast<std::size_t>(degree(gen))][static_cast<std::size_t>(j)];
                if (value != 0) {
                    out[m] = value;
                }
            }
        } else {
            // x f1 rest = f1 (x rest) + [x, f1] rest
            const int f1 = gen_of_code(m.front());
            const Monomial rest(m.begin() + 1, m.end());
            for (const auto& [mono, c] : act_locked(gen, rest)) {
                add_into(out, act_locked(f1, mono), c);
            }
            const int deg = degree(gen) + degree(f1);
            if (deg <= n_) {
                for (const auto& [k, c] : basis_->bracket(gi, g_index(f1))) {
                    add_into(out, act_locked(generator(k, deg), rest), Rational(c));
                }
            }
        }
        return memo_.emplace(std::move(key), std::move(out)).first->second;
    }

    void enumerate(std::size_t budget)
    {
        const int P = basis_->num_positive();
        const int codes = P * (n_ + 1);
        std::size_t total = 0;
        Monomial cur;
        RootCoords beta(static_cast<std::size_t>(datum().rank()), 0);
        std::function<void(int, int)> rec = [&](int min_code, int h) {
            spaces_[beta].push_back(cur);
            if (++total > budget) {
                throw ResourceError("Verma module window exceeds " + std::to_string(budget) + " monomials at depth " +
                                    std::to_string(depth_));
            }
            for (int c = min_code; c < codes; ++c) {
                const auto& root = datum().positive_roots()[static_cast<std::size_t>(c / (n_ + 1))];
                const int hr = height(root);
                if (h + hr > depth_) {
                    continue;
                }
                cur.push_back(c);
                beta = beta + root;
                rec(c, h + hr);
                beta = beta - root;
                cur.pop_back();
            }
        };
        rec(0, 0);
        for (auto& [b, v] : spaces_) {
            std::sort(v.begin(), v.end());
        }
    }

    std::shared_ptr<const ChevalleyBasis> basis_;
    TruncatedWeight highest_;
    int depth_ = 0;
    int n_ = 0;
    std::map<RootCoords, std::vector<Monomial>> spaces_;
    mutable std::recursive_mutex mutex_;
    mutable std::unordered_map<Monomial, ModuleVector, IntVectorHash> memo_;
};

inline std::shared_ptr<TruncatedModule> build_verma(const RootDatum& d, const TruncatedWeight& highest, int depth)
{
    return std::make_shared<TruncatedModule>(d, highest, depth);
}

/// Per weight space: dim M, dim of the maximal-submodule slice, dim L.
struct WeightSpaceReport {
    RootCoords beta;
    std::size_t verma_dim = 0;
    std::size_t radical_dim = 0;
    std::size_t simple_dim = 0;
};

struct SimpleCharacterResult {
    FormalCharacter character;
    std::vector<WeightSpaceReport> spaces;
};

/// ch L_Lambda within the module's window. A vector of weight space beta lies in the
/// maximal submodule iff every raising monomial of weight beta kills it, computed
/// recursively through the simple root vectors e_{alpha_j, i}.
inline SimpleCharacterResult simple_character_report(const TruncatedModule& M)
{
    const RootDatum& d = M.datum();
    const auto& cb = M.chevalley();
    std::map<RootCoords, RationalMatrix, ConeOrder> q;
    SimpleCharacterResult out;
    out.character.base = M.highest().base();
    out.character.depth = M.depth();
    for (const auto& beta : M.weights()) {
        const std::size_t dim = M.dimension(beta);
        RationalMatrix qb;
        if (height(beta) == 0) {
            qb = RationalMatrix::identity(1);
        } else {
            RationalMatrix stack(0, dim);
            for (int j = 0; j < d.rank(); ++j) {
                RootCoords below = beta;
                below[static_cast<std::size_t>(j)] -= 1;
                if (!is_nonnegative(below)) {
                    continue;
                }
                const RationalMatrix& qbelow = q.at(below);
                if (qbelow.rows() == 0) {
                    continue;
                }
                for (int i = 0; i <= M.level(); ++i) {
                    stack.append_rows(qbelow * M.matrix(M.generator(cb.e_index(j), i), beta));
                }
            }
            qb = stack.row_basis();
        }
        out.character.set(beta, static_cast<std::int64_t>(qb.rows()));
        out.spaces.push_back({beta, dim, dim - qb.rows(), qb.rows()});
        q.emplace(beta, std::move(qb));
    }
    return out;
}

inline FormalCharacter simple_character(const RootDatum& d, const TruncatedWeight& highest, int depth)
{
    return simple_character_report(TruncatedModule(d, highest, depth)).character;
}

/// Character of the joint kernel of e_{gamma,i} for gamma outside Phi_J, all i.
inline FormalCharacter invariants_character(const TruncatedModule& M, const LeviDatum& L)
{
    const RootDatum& d = M.datum();
    if (M.level() >= 1) {
        auto levi = standard_levi(d, singular_roots(d, M.highest().top()));
        if (!levi || levi->J != L.J) {
            throw ContractError("Phi_{lambda_n} is not the given standard Levi");
        }
    }
    const auto& cb = M.chevalley();
    FormalCharacter out{M.highest().base(), M.depth(), {}};
    for (const auto& beta : M.weights()) {
        RationalMatrix stack(0, M.dimension(beta));
        for (int k = 0; k < cb.num_positive(); ++k) {
            const RootCoords& gamma = d.positive_roots()[static_cast<std::size_t>(k)];
            bool in_levi = true;
            for (int i = 0; i < d.rank(); ++i) {
                if (gamma[static_cast<std::size_t>(i)] != 0 && !L.contains(i)) {
                    in_levi = false;
                }
            }
            if (in_levi) {
                continue;
            }
            for (int i = 0; i <= M.level(); ++i) {
                stack.append_rows(M.matrix(M.generator(cb.e_index(k), i), beta));
            }
        }
        out.set(beta, static_cast<std::int64_t>(M.dimension(beta) - stack.rank()));
    }
    return out;
}

/// Simple characters keyed by highest weight; keeps the deepest one computed.
class SimpleCharacterCache {
public:
    explicit SimpleCharacterCache(RootDatum d) : d_(std::move(d)) {}

    FormalCharacter get(const TruncatedWeight& highest, int depth)
    {
        {
            std::lock_guard<std::mutex> lock(mutex_);
            auto it = cache_.find(highest);
            if (it != cache_.end() && it->second.depth >= depth) {
                return it->second.truncated(depth);
            }
        }
        FormalCharacter ch = simple_character(d_, highest, depth);
        std::lock_guard<std::mutex> lock(mutex_);
        auto& slot = cache_[highest];
        if (slot.entries.empty() || slot.depth < ch.depth) {
            slot = ch;
        }
        return ch;
    }

    SimpleCharacterProvider provider()
    {
        return [this](const TruncatedWeight& w, int depth) { return get(w, depth); };
    }

private:
    RootDatum d_;
    std::mutex mutex_;
    std::map<TruncatedWeight, FormalCharacter> cache_;
};

/// All composition multiplicities of M_Lambda within depth.
inline std::map<Weight, std::int64_t> oracle_decomposition(const RootDatum& d, const TruncatedWeight& highest, int depth,
                                                           SimpleCharacterCache& cache)
{
    return decompose_in_block(d, verma_character(d, highest, depth), BlockLabel::of(highest), cache.provider());
}

/// [M_Lambda : L_N] by decomposing ch M_Lambda into brute-force simple characters.
inline std::int64_t oracle_multiplicity(const RootDatum& d, const TruncatedWeight& lambda, const TruncatedWeight& nu,
                                        int depth, SimpleCharacterCache& cache)
{
    if (!same_block(lambda, nu)) {
        return 0;
    }
    auto gap = dominance_gap(d, nu.base(), lambda.base());
    if (!gap) {
        return 0;
    }
    if (depth < height(*gap)) {
        throw ContractError("oracle depth below ht(lambda_0 - nu_0)");
    }
    const auto mult = oracle_decomposition(d, lambda, depth, cache);
    auto it = mult.find(nu.base());
    return it == mult.end() ? 0 : it->second;
}

inline std::int64_t oracle_multiplicity(const RootDatum& d, const TruncatedWeight& lambda, const TruncatedWeight& nu,
                                        int depth)
{
    SimpleCharacterCache cache(d);
    return oracle_multiplicity(d, lambda, nu, depth, cache);
}

} // namespace trunco
