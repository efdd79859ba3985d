#pragma once

// Finite root systems: Cartan types, root data, weights in fundamental-weight
// coordinates, Weyl group elements, Bruhat and dominance orders.
//
// Conventions:
//  * Simple roots are indexed 0..r-1 internally (1-based only at the CLI).
//  * cartan(i, j) = <alpha_j, alpha_i^vee>.
//  * A Weight stores <lambda, alpha_i^vee> for each simple coroot, so the simple
//    root alpha_j is column j of the Cartan matrix and s_i(v) = v - v_i alpha_i.
//  * Roots are stored as integer coordinates over the simple roots.

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <optional>
#include <ostream>
#include <queue>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "trunco/matrix.hpp"
#include "trunco/rational.hpp"

namespace trunco {

using IntMatrix = std::vector<std::vector<int>>;
using RootCoords = std::vector<int>;

inline int height(const RootCoords& beta) { return std::accumulate(beta.begin(), beta.end(), 0); }

inline bool is_nonnegative(const RootCoords& beta)
{
    return std::all_of(beta.begin(), beta.end(), [](int x) { return x >= 0; });
}

inline RootCoords operator+(RootCoords a, const RootCoords& b)
{
    for (std::size_t i = 0; i < a.size(); ++i) {
        a[i] += b[i];
    }
    return a;
}

inline RootCoords operator-(RootCoords a, const RootCoords& b)
{
    for (std::size_t i = 0; i < a.size(); ++i) {
        a[i] -= b[i];
    }
    return a;
}

inline RootCoords negated(RootCoords a)
{
    for (auto& x : a) {
        x = -x;
    }
    return a;
}

inline std::string to_string(const RootCoords& beta)
{
    std::string out = "[";
    for (std::size_t i = 0; i < beta.size(); ++i) {
        out += (i ? "," : "") + std::to_string(beta[i]);
    }
    return out + "]";
}

/// All beta in Z_{>=0}^rank with height <= max_height, ordered by height then
/// lexicographically descending (so alpha_1 precedes alpha_2).
inline std::vector<RootCoords> cone_vectors(int rank, int max_height)
{
    std::vector<RootCoords> out;
    RootCoords cur(static_cast<std::size_t>(rank), 0);
    for (int h = 0; h <= max_height; ++h) {
        // enumerate compositions of h into `rank` parts, descending lex
        std::function<void(int, int)> rec = [&](int pos, int left) {
            if (pos == rank - 1) {
                cur[static_cast<std::size_t>(pos)] = left;
                out.push_back(cur);
                return;
            }
            for (int v = left; v >= 0; --v) {
                cur[static_cast<std::size_t>(pos)] = v;
                rec(pos + 1, left - v);
            }
        };
        if (rank == 0) {
            if (h == 0) {
                out.emplace_back();
            }
            continue;
        }
        rec(0, h);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Weights

struct Weight {
    std::vector<Rational> coords;

    Weight() = default;
    explicit Weight(std::vector<Rational> c) : coords(std::move(c))
    {
        for (auto& q : coords) {
            q.canonicalize();
        }
    }
    Weight(std::initializer_list<long> c)
    {
        for (long x : c) {
            coords.emplace_back(x);
        }
    }

    static Weight zero(std::size_t rank) { return Weight(std::vector<Rational>(rank)); }

    std::size_t size() const { return coords.size(); }
    Rational& operator[](std::size_t i) { return coords[i]; }
    const Rational& operator[](std::size_t i) const { return coords[i]; }

    bool is_zero() const
    {
        return std::all_of(coords.begin(), coords.end(), [](const Rational& q) { return q == 0; });
    }
    bool is_integral() const
    {
        return std::all_of(coords.begin(), coords.end(), [](const Rational& q) { return is_integer(q); });
    }

    Weight& operator+=(const Weight& o)
    {
        check(o);
        for (std::size_t i = 0; i < coords.size(); ++i) {
            coords[i] += o.coords[i];
        }
        return *this;
    }
    Weight& operator-=(const Weight& o)
    {
        check(o);
        for (std::size_t i = 0; i < coords.size(); ++i) {
            coords[i] -= o.coords[i];
        }
        return *this;
    }
    friend Weight operator+(Weight a, const Weight& b) { return a += b; }
    friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
    friend Weight operator-(Weight a)
    {
        for (auto& x : a.coords) {
            x = -x;
        }
        return a;
    }
    friend Weight operator*(const Rational& s, Weight a)
    {
        for (auto& x : a.coords) {
            x *= s;
        }
        return a;
    }

    friend bool operator==(const Weight& a, const Weight& b) { return a.coords == b.coords; }
    friend bool operator!=(const Weight& a, const Weight& b) { return !(a == b); }
    friend bool operator<(const Weight& a, const Weight& b)
    {
        return std::lexicographical_compare(a.coords.begin(), a.coords.end(), b.coords.begin(), b.coords.end());
    }

    std::string str() const { return "[" + join_rationals(coords) + "]"; }

private:
    void check(const Weight& o) const
    {
        if (o.coords.size() != coords.size()) {
            throw ContractError("weight dimension mismatch");
        }
    }
};

inline std::ostream& operator<<(std::ostream& os, const Weight& w) { return os << w.str(); }

// ---------------------------------------------------------------------------
// Cartan types

struct SimpleFactor {
    char family = 'A';
    int rank = 1;
};

struct CartanType {
    std::vector<SimpleFactor> factors;

    int rank() const
    {
        int r = 0;
        for (const auto& f : factors) {
            r += f.rank;
        }
        return r;
    }

    std::string str() const
    {
        std::string out;
        for (std::size_t i = 0; i < factors.size(); ++i) {
            out += (i ? "x" : "") + std::string(1, factors[i].family) + std::to_string(factors[i].rank);
        }
        return out;
    }
};

inline bool is_legal(const SimpleFactor& f)
{
    switch (f.family) {
    case 'A': return f.rank >= 1;
    case 'B': return f.rank >= 2;
    case 'C': return f.rank >= 2;
    case 'D': return f.rank >= 4;
    case 'E': return f.rank >= 6 && f.rank <= 8;
    case 'F': return f.rank == 4;
    case 'G': return f.rank == 2;
    default: return false;
    }
}

/// Parses "A2", "b3", "A1xA1", ... ('x' separates simple factors, case-insensitive).
inline CartanType parse_cartan_type(std::string_view text)
{
    std::string s;
    for (char c : text) {
        if (!std::isspace(static_cast<unsigned char>(c))) {
            s.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
        }
    }
    if (s.empty()) {
        throw ParseError("empty Cartan type");
    }
    CartanType t;
    std::size_t pos = 0;
    while (pos <= s.size()) {
        const auto next = s.find('X', pos);
        const std::string part = s.substr(pos, next == std::string::npos ? std::string::npos : next - pos);
        if (part.size() < 2 || !std::isalpha(static_cast<unsigned char>(part[0]))) {
            throw ParseError("malformed Cartan type '" + std::string(text) + "'");
        }
        const std::string digits = part.substr(1);
        if (!std::all_of(digits.begin(), digits.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }) ||
            digits.size() > 3) {
            throw ParseError("malformed Cartan type '" + std::string(text) + "'");
        }
        SimpleFactor f{part[0], std::stoi(digits)};
        if (!is_legal(f)) {
            throw ParseError("illegal Cartan type " + part);
        }
        t.factors.push_back(f);
        if (next == std::string::npos) {
            break;
        }
        pos = next + 1;
    }
    return t;
}

/// Bourbaki-numbered Cartan matrix of a simple type.
inline IntMatrix simple_cartan_matrix(const SimpleFactor& f)
{
    if (!is_legal(f)) {
        throw ParseError("illegal Cartan type " + std::string(1, f.family) + std::to_string(f.rank));
    }
    const int r = f.rank;
    IntMatrix a(static_cast<std::size_t>(r), std::vector<int>(static_cast<std::size_t>(r), 0));
    auto link = [&](int i, int j) {
        a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = -1;
        a[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = -1;
    };
    for (int i = 0; i < r; ++i) {
        a[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 2;
    }
    switch (f.family) {
    case 'A':
        for (int i = 0; i + 1 < r; ++i) link(i, i + 1);
        break;
    case 'B':
        for (int i = 0; i + 1 < r; ++i) link(i, i + 1);
        // alpha_r short: <alpha_{r-1}, alpha_r^vee> = -2
        a[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(r - 2)] = -2;
        break;
    case 'C':
        for (int i = 0; i + 1 < r; ++i) link(i, i + 1);
        // alpha_r long: <alpha_r, alpha_{r-1}^vee> = -2
        a[static_cast<std::size_t>(r - 2)][static_cast<std::size_t>(r - 1)] = -2;
        break;
    case 'D':
        for (int i = 0; i + 2 < r; ++i) link(i, i + 1);
        link(r - 3, r - 1);
        break;
    case 'E':
        link(0, 2);
        link(1, 3);
        for (int i = 2; i + 1 < r; ++i) link(i, i + 1);
        break;
    case 'F':
        link(0, 1);
        link(1, 2);
        link(2, 3);
        a[2][1] = -2; // alpha_3 short
        break;
    case 'G':
        a[0][1] = -3; // alpha_1 short
        a[1][0] = -1;
        break;
    default: break;
    }
    return a;
}

inline IntMatrix cartan_matrix_for(const CartanType& t)
{
    const int r = t.rank();
    IntMatrix a(static_cast<std::size_t>(r), std::vector<int>(static_cast<std::size_t>(r), 0));
    int off = 0;
    for (const auto& f : t.factors) {
        const IntMatrix block = simple_cartan_matrix(f);
        for (int i = 0; i < f.rank; ++i) {
            for (int j = 0; j < f.rank; ++j) {
                a[static_cast<std::size_t>(off + i)][static_cast<std::size_t>(off + j)] =
                    block[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            }
        }
        off += f.rank;
    }
    return a;
}

// ---------------------------------------------------------------------------
// Root datum

class RootDatum {
public:
    /// Rank-0 datum (the Cartan subalgebra of an empty Levi).
    RootDatum() : d_(std::make_shared<Data>()) {}

    static RootDatum from_cartan_matrix(IntMatrix a, std::string label = {})
    {
        RootDatum out;
        auto d = std::make_shared<Data>();
        d->cartan = std::move(a);
        d->label = std::move(label);
        build(*d);
        out.d_ = std::move(d);
        return out;
    }

    int rank() const { return static_cast<int>(d_->cartan.size()); }
    const std::string& label() const { return d_->label; }
    const IntMatrix& cartan_matrix() const { return d_->cartan; }
    int cartan(int i, int j) const { return d_->cartan[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; }

    /// Ordered by height, then descending lexicographic; the first `rank()` are the simple roots.
    const std::vector<RootCoords>& positive_roots() const { return d_->positive; }
    std::size_t num_positive_roots() const { return d_->positive.size(); }
    /// Coefficients of the coroot of positive root `idx` over the simple coroots.
    const std::vector<int>& coroot(std::size_t idx) const { return d_->coroots[idx]; }
    /// Half the squared length of each simple root, normalized per component.
    const std::vector<Rational>& symmetrizer() const { return d_->sym; }

    std::optional<std::size_t> positive_root_index(const RootCoords& beta) const
    {
        auto it = d_->index.find(beta);
        if (it == d_->index.end()) {
            return std::nullopt;
        }
        return it->second;
    }

    bool is_root(const RootCoords& beta) const
    {
        return positive_root_index(beta).has_value() || positive_root_index(negated(beta)).has_value();
    }

    Weight root_to_weight(const RootCoords& beta) const
    {
        Weight w = Weight::zero(static_cast<std::size_t>(rank()));
        for (int i = 0; i < rank(); ++i) {
            long s = 0;
            for (int j = 0; j < rank(); ++j) {
                s += static_cast<long>(cartan(i, j)) * beta[static_cast<std::size_t>(j)];
            }
            w[static_cast<std::size_t>(i)] = s;
        }
        return w;
    }

    Weight simple_root(int i) const
    {
        RootCoords e(static_cast<std::size_t>(rank()), 0);
        e[static_cast<std::size_t>(i)] = 1;
        return root_to_weight(e);
    }

    Weight rho() const { return Weight(std::vector<Rational>(static_cast<std::size_t>(rank()), Rational(1))); }

    /// <v, beta^vee> for any root beta (positive or negative).
    Rational pair(const Weight& v, const RootCoords& beta) const
    {
        bool neg = false;
        auto idx = positive_root_index(beta);
        if (!idx) {
            idx = positive_root_index(negated(beta));
            neg = true;
        }
        if (!idx) {
            throw ContractError("pairing with a non-root " + to_string(beta));
        }
        Rational s = 0;
        const auto& c = coroot(*idx);
        for (int j = 0; j < rank(); ++j) {
            if (c[static_cast<std::size_t>(j)] != 0) {
                s += c[static_cast<std::size_t>(j)] * v[static_cast<std::size_t>(j)];
            }
        }
        return neg ? Rational(-s) : s;
    }

    /// Symmetric invariant form on the root lattice, (alpha_i, alpha_j) = d_i a_ij.
    Rational inner(const RootCoords& a, const RootCoords& b) const
    {
        Rational s = 0;
        for (int i = 0; i < rank(); ++i) {
            if (a[static_cast<std::size_t>(i)] == 0) {
                continue;
            }
            for (int j = 0; j < rank(); ++j) {
                if (b[static_cast<std::size_t>(j)] == 0 || cartan(i, j) == 0) {
                    continue;
                }
                s += d_->sym[static_cast<std::size_t>(i)] * cartan(i, j) * a[static_cast<std::size_t>(i)] *
                     b[static_cast<std::size_t>(j)];
            }
        }
        return s;
    }

    /// Coordinates of a weight over the simple roots (exact rational solve).
    std::vector<Rational> to_root_basis(const Weight& v) const
    {
        if (v.size() != static_cast<std::size_t>(rank())) {
            throw ContractError("weight of wrong rank");
        }
        if (rank() == 0) {
            return {};
        }
        auto sol = d_->cartan_q.solve(v.coords);
        if (!sol) {
            throw InternalError("Cartan matrix is singular");
        }
        return *sol;
    }

    /// Serialization of the Cartan matrix; two data with equal keys are identical.
    const std::string& key() const { return d_->key; }

    /// The root datum generated by the simple roots J (Cartan submatrix, J order kept).
    RootDatum sub_datum(const std::vector<int>& J) const
    {
        IntMatrix a(J.size(), std::vector<int>(J.size()));
        for (std::size_t i = 0; i < J.size(); ++i) {
            for (std::size_t j = 0; j < J.size(); ++j) {
                a[i][j] = cartan(J[i], J[j]);
            }
        }
        std::string name = label() + " Levi {";
        for (std::size_t i = 0; i < J.size(); ++i) {
            name += (i ? "," : "") + std::to_string(J[i] + 1);
        }
        return from_cartan_matrix(std::move(a), name + "}");
    }

    friend bool operator==(const RootDatum& a, const RootDatum& b) { return a.key() == b.key(); }

private:
    struct Data {
        IntMatrix cartan;
        std::string label;
        std::string key;
        std::vector<Rational> sym;
        std::vector<RootCoords> positive;
        std::vector<std::vector<int>> coroots;
        std::map<RootCoords, std::size_t> index;
        RationalMatrix cartan_q;
    };

    static void build(Data& d)
    {
        const std::size_t r = d.cartan.size();
        for (const auto& row : d.cartan) {
            if (row.size() != r) {
                throw ParseError("Cartan matrix is not square");
            }
        }
        for (std::size_t i = 0; i < r; ++i) {
            if (d.cartan[i][i] != 2) {
                throw ParseError("Cartan matrix diagonal must be 2");
            }
            for (std::size_t j = 0; j < r; ++j) {
                if (i != j && (d.cartan[i][j] > 0 || ((d.cartan[i][j] == 0) != (d.cartan[j][i] == 0)))) {
                    throw ParseError("not a generalized Cartan matrix");
                }
            }
        }
        std::ostringstream key;
        key << r << ":";
        for (const auto& row : d.cartan) {
            for (int x : row) {
                key << x << ",";
            }
        }
        d.key = key.str();
        if (d.label.empty()) {
            d.label = "cartan(" + d.key + ")";
        }

        // symmetrizer, one BFS per connected component
        d.sym.assign(r, Rational(0));
        for (std::size_t s = 0; s < r; ++s) {
            if (d.sym[s] != 0) {
                continue;
            }
            d.sym[s] = 1;
            std::queue<std::size_t> q;
            q.push(s);
            while (!q.empty()) {
                const auto i = q.front();
                q.pop();
                for (std::size_t j = 0; j < r; ++j) {
                    if (i == j || d.cartan[i][j] == 0) {
                        continue;
                    }
                    const Rational dj = d.sym[i] * d.cartan[i][j] / Rational(d.cartan[j][i]);
                    if (d.sym[j] == 0) {
                        d.sym[j] = dj;
                        q.push(j);
                    } else if (d.sym[j] != dj) {
                        throw ParseError("Cartan matrix is not symmetrizable");
                    }
                }
            }
        }
        // normalize each component so that its shortest root has d = 1
        {
            std::vector<int> comp(r, -1);
            int nc = 0;
            for (std::size_t s = 0; s < r; ++s) {
                if (comp[s] >= 0) {
                    continue;
                }
                std::vector<std::size_t> members;
                std::queue<std::size_t> q;
                q.push(s);
                comp[s] = nc;
                while (!q.empty()) {
                    auto i = q.front();
                    q.pop();
                    members.push_back(i);
                    for (std::size_t j = 0; j < r; ++j) {
                        if (comp[j] < 0 && d.cartan[i][j] != 0) {
                            comp[j] = nc;
                            q.push(j);
                        }
                    }
                }
                Rational mn = d.sym[members[0]];
                for (auto i : members) {
                    mn = std::min(mn, d.sym[i]);
                }
                for (auto i : members) {
                    d.sym[i] /= mn;
                }
                ++nc;
            }
        }

        // positive roots by closure under root strings
        std::vector<std::vector<RootCoords>> by_height(2);
        for (std::size_t i = 0; i < r; ++i) {
            RootCoords e(r, 0);
            e[i] = 1;
            by_height[1].push_back(e);
            d.index[e] = 0;
        }
        auto is_pos_root = [&](const RootCoords& b) { return d.index.count(b) > 0; };
        constexpr std::size_t kRootLimit = 20000;
        for (std::size_t h = 1; h < by_height.size(); ++h) {
            for (const auto& beta : by_height[h]) {
                for (std::size_t i = 0; i < r; ++i) {
                    int p = 0;
                    RootCoords down = beta;
                    while (true) {
                        down[i] -= 1;
                        if (!is_pos_root(down)) {
                            break;
                        }
                        ++p;
                    }
                    int pairing = 0;
                    for (std::size_t j = 0; j < r; ++j) {
                        pairing += beta[j] * d.cartan[i][j];
                    }
                    if (p - pairing > 0) {
                        RootCoords up = beta;
                        up[i] += 1;
                        if (!is_pos_root(up)) {
                            if (by_height.size() <= h + 1) {
                                by_height.emplace_back();
                            }
                            by_height[h + 1].push_back(up);
                            d.index[up] = 0;
                            if (d.index.size() > kRootLimit) {
                                throw ParseError("Cartan matrix is not of finite type");
                            }
                        }
                    }
                }
            }
        }
        for (std::size_t h = 1; h < by_height.size(); ++h) {
            auto layer = by_height[h];
            std::sort(layer.begin(), layer.end(), std::greater<>());
            for (auto& b : layer) {
                d.positive.push_back(b);
            }
        }
        d.index.clear();
        for (std::size_t k = 0; k < d.positive.size(); ++k) {
            d.index[d.positive[k]] = k;
        }

        // coroots: beta^vee = sum_j k_j (d_j / d_beta) alpha_j^vee
        for (const auto& beta : d.positive) {
            Rational len = 0;
            for (std::size_t i = 0; i < r; ++i) {
                for (std::size_t j = 0; j < r; ++j) {
                    len += d.sym[i] * d.cartan[i][j] * beta[i] * beta[j];
                }
            }
            const Rational dbeta = len / 2;
            std::vector<int> c(r, 0);
            for (std::size_t j = 0; j < r; ++j) {
                Rational cj = beta[j] * d.sym[j] / dbeta;
                if (!is_integer(cj)) {
                    throw ParseError("Cartan matrix is not crystallographic");
                }
                c[j] = static_cast<int>(cj.get_num().get_si());
            }
            d.coroots.push_back(std::move(c));
        }

        d.cartan_q = RationalMatrix(r, r);
        for (std::size_t i = 0; i < r; ++i) {
            for (std::size_t j = 0; j < r; ++j) {
                d.cartan_q(i, j) = d.cartan[i][j];
            }
        }
        if (r > 0 && d.cartan_q.rank() != r) {
            throw ParseError("Cartan matrix is singular (not of finite type)");
        }
    }

    std::shared_ptr<const Data> d_;
};

inline RootDatum build_root_datum(const CartanType& t)
{
    return RootDatum::from_cartan_matrix(cartan_matrix_for(t), t.str());
}

inline RootDatum build_root_datum(std::string_view type) { return build_root_datum(parse_cartan_type(type)); }

// ---------------------------------------------------------------------------
// Weyl group elements

/// A Weyl group element: a reduced word (s_{w[0]} s_{w[1]} ... acting right to
/// left) together with its cached matrices on weight and root coordinates.
class WeylElement {
public:
    WeylElement() = default;

    static WeylElement identity(const RootDatum& d)
    {
        WeylElement w;
        w.datum_ = d;
        const auto r = static_cast<std::size_t>(d.rank());
        w.weight_matrix_.assign(r, std::vector<int>(r, 0));
        w.root_matrix_.assign(r, std::vector<int>(r, 0));
        for (std::size_t i = 0; i < r; ++i) {
            w.weight_matrix_[i][i] = 1;
            w.root_matrix_[i][i] = 1;
        }
        return w;
    }

    /// Builds the element of a word; a non-reduced word is replaced by the
    /// canonical (lexicographically first) reduced word of the same element.
    static WeylElement from_word(const RootDatum& d, const std::vector<int>& word)
    {
        WeylElement w = identity(d);
        for (auto it = word.rbegin(); it != word.rend(); ++it) {
            if (*it < 0 || *it >= d.rank()) {
                throw ParseError("simple reflection index out of range");
            }
            w.left_multiply(*it);
        }
        w.word_ = word;
        if (w.count_inversions() != static_cast<int>(word.size())) {
            w.word_ = w.canonical_word();
        }
        return w;
    }

    static WeylElement simple(const RootDatum& d, int i) { return from_word(d, {i}); }

    const RootDatum& datum() const { return datum_; }
    const std::vector<int>& word() const { return word_; }
    int length() const { return static_cast<int>(word_.size()); }
    const IntMatrix& weight_matrix() const { return weight_matrix_; }

    Weight act(const Weight& v) const
    {
        if (v.size() != weight_matrix_.size()) {
            throw ContractError("Weyl action on a weight of the wrong rank");
        }
        Weight out = Weight::zero(v.size());
        for (std::size_t i = 0; i < v.size(); ++i) {
            for (std::size_t j = 0; j < v.size(); ++j) {
                if (weight_matrix_[i][j] != 0 && v[j] != 0) {
                    out[i] += weight_matrix_[i][j] * v[j];
                }
            }
        }
        return out;
    }

    RootCoords act_root(const RootCoords& beta) const
    {
        RootCoords out(beta.size(), 0);
        for (std::size_t i = 0; i < beta.size(); ++i) {
            for (std::size_t j = 0; j < beta.size(); ++j) {
                out[i] += root_matrix_[i][j] * beta[j];
            }
        }
        return out;
    }

    /// s_i w < w.
    bool has_left_descent(int i) const
    {
        // w^{-1}(alpha_i) < 0  <=>  <w rho, alpha_i^vee> < 0
        int s = 0;
        for (std::size_t j = 0; j < weight_matrix_.size(); ++j) {
            s += weight_matrix_[static_cast<std::size_t>(i)][j];
        }
        return s < 0;
    }

    /// w s_i < w.
    bool has_right_descent(int i) const
    {
        RootCoords e(root_matrix_.size(), 0);
        e[static_cast<std::size_t>(i)] = 1;
        const auto img = act_root(e);
        return !is_nonnegative(img);
    }

    WeylElement inverse() const
    {
        std::vector<int> rev(word_.rbegin(), word_.rend());
        return from_word(datum_, rev);
    }

    friend WeylElement operator*(const WeylElement& a, const WeylElement& b)
    {
        std::vector<int> w = a.word_;
        w.insert(w.end(), b.word_.begin(), b.word_.end());
        return from_word(a.datum_, w);
    }

    friend bool operator==(const WeylElement& a, const WeylElement& b) { return a.weight_matrix_ == b.weight_matrix_; }
    friend bool operator!=(const WeylElement& a, const WeylElement& b) { return !(a == b); }

    /// w(rho) in fundamental coordinates; identifies w uniquely.
    std::vector<int> rho_image() const
    {
        std::vector<int> out(weight_matrix_.size(), 0);
        for (std::size_t i = 0; i < out.size(); ++i) {
            for (int x : weight_matrix_[i]) {
                out[i] += x;
            }
        }
        return out;
    }

    /// Number of positive roots sent to negative roots.
    int count_inversions() const
    {
        int n = 0;
        for (const auto& beta : datum_.positive_roots()) {
            if (!is_nonnegative(act_root(beta))) {
                ++n;
            }
        }
        return n;
    }

    std::string str() const
    {
        if (word_.empty()) {
            return "e";
        }
        std::string out;
        for (std::size_t i = 0; i < word_.size(); ++i) {
            out += (i ? " " : "") + std::string("s") + std::to_string(word_[i] + 1);
        }
        return out;
    }

private:
    // this <- s_i * this
    void left_multiply(int i)
    {
        const auto r = weight_matrix_.size();
        const auto ii = static_cast<std::size_t>(i);
        // weights: (s_i v)_k = v_k - v_i a_{k i}
        std::vector<int> row_i = weight_matrix_[ii];
        for (std::size_t k = 0; k < r; ++k) {
            const int a = datum_.cartan(static_cast<int>(k), i);
            if (a == 0) {
                continue;
            }
            for (std::size_t j = 0; j < r; ++j) {
                weight_matrix_[k][j] -= a * row_i[j];
            }
        }
        // roots: s_i(beta) = beta - <beta, alpha_i^vee> alpha_i
        std::vector<int> pair(r, 0);
        for (std::size_t j = 0; j < r; ++j) {
            for (std::size_t m = 0; m < r; ++m) {
                pair[j] += datum_.cartan(i, static_cast<int>(m)) * root_matrix_[m][j];
            }
        }
        for (std::size_t j = 0; j < r; ++j) {
            root_matrix_[ii][j] -= pair[j];
        }
    }

    std::vector<int> canonical_word() const
    {
        std::vector<int> out;
        std::vector<int> v = rho_image();
        const int r = datum_.rank();
        while (true) {
            int found = -1;
            for (int i = 0; i < r; ++i) {
                if (v[static_cast<std::size_t>(i)] < 0) {
                    found = i;
                    break;
                }
            }
            if (found < 0) {
                break;
            }
            out.push_back(found);
            const int vi = v[static_cast<std::size_t>(found)];
            for (int k = 0; k < r; ++k) {
                v[static_cast<std::size_t>(k)] -= vi * datum_.cartan(k, found);
            }
        }
        return out;
    }

    RootDatum datum_;
    std::vector<int> word_;
    IntMatrix weight_matrix_;
    IntMatrix root_matrix_;
};

inline Weight weyl_act(const WeylElement& w, const Weight& v) { return w.act(v); }

/// Bruhat order via the lifting property: for s with sy < y,
/// x <= y  iff  (sx < x ? sx <= sy : x <= sy).
inline bool bruhat_leq(const WeylElement& x, const WeylElement& y)
{
    if (x.datum().key() != y.datum().key()) {
        throw ContractError("Bruhat comparison across different Weyl groups");
    }
    WeylElement a = x;
    WeylElement b = y;
    while (true) {
        if (a.length() > b.length()) {
            return false;
        }
        if (b.length() == 0) {
            return a.length() == 0;
        }
        const int s = b.word().front();
        const WeylElement sb = WeylElement::from_word(b.datum(), std::vector<int>(b.word().begin() + 1, b.word().end()));
        if (a.has_left_descent(s)) {
            a = WeylElement::simple(a.datum(), s) * a;
        }
        b = sb;
    }
}

/// hi - lo in Z_{>=0}{alpha_j : j in J}.
inline bool dominance_leq(const RootDatum& d, const Weight& lo, const Weight& hi, const std::vector<int>& J)
{
    const auto coeffs = d.to_root_basis(hi - lo);
    std::vector<bool> in_j(static_cast<std::size_t>(d.rank()), false);
    for (int j : J) {
        in_j[static_cast<std::size_t>(j)] = true;
    }
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        const Rational& c = coeffs[i];
        if (!is_integer(c) || c < 0 || (!in_j[i] && c != 0)) {
            return false;
        }
    }
    return true;
}

inline std::vector<int> all_simple(const RootDatum& d)
{
    std::vector<int> J(static_cast<std::size_t>(d.rank()));
    std::iota(J.begin(), J.end(), 0);
    return J;
}

inline bool dominance_leq(const RootDatum& d, const Weight& lo, const Weight& hi)
{
    return dominance_leq(d, lo, hi, all_simple(d));
}

/// hi - lo as a Z_{>=0} combination of simple roots, if it is one.
inline std::optional<RootCoords> dominance_gap(const RootDatum& d, const Weight& lo, const Weight& hi)
{
    const auto coeffs = d.to_root_basis(hi - lo);
    RootCoords out;
    for (const auto& c : coeffs) {
        if (!is_integer(c) || c < 0 || !c.get_num().fits_sint_p()) {
            return std::nullopt;
        }
        out.push_back(static_cast<int>(c.get_num().get_si()));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Materialized Weyl groups

/// All elements of W, in breadth-first order by length with the
/// lexicographically first reduced word for each element.
class WeylGroup {
public:
    static constexpr std::size_t kDefaultLimit = 200000;
    static constexpr std::size_t kBruhatTableLimit = 6000;

    explicit WeylGroup(RootDatum d, std::size_t limit = kDefaultLimit) : datum_(std::move(d))
    {
        const int r = datum_.rank();
        elements_.push_back(WeylElement::identity(datum_));
        index_[elements_[0].rho_image()] = 0;
        std::size_t layer_begin = 0;
        while (layer_begin < elements_.size()) {
            const std::size_t layer_end = elements_.size();
            for (std::size_t k = layer_begin; k < layer_end; ++k) {
                for (int i = 0; i < r; ++i) {
                    if (elements_[k].has_right_descent(i)) {
                        continue;
                    }
                    std::vector<int> word = elements_[k].word();
                    word.push_back(i);
                    WeylElement w = WeylElement::from_word(datum_, word);
                    auto key = w.rho_image();
                    if (index_.count(key)) {
                        continue;
                    }
                    index_[key] = elements_.size();
                    elements_.push_back(std::move(w));
                    if (elements_.size() > limit) {
                        throw ResourceError("Weyl group of " + datum_.label() + " exceeds " + std::to_string(limit) +
                                            " elements");
                    }
                }
            }
            layer_begin = layer_end;
        }
        const std::size_t n = elements_.size();
        left_.assign(static_cast<std::size_t>(r), std::vector<std::size_t>(n));
        right_.assign(static_cast<std::size_t>(r), std::vector<std::size_t>(n));
        for (int i = 0; i < r; ++i) {
            const WeylElement s = WeylElement::simple(datum_, i);
            for (std::size_t k = 0; k < n; ++k) {
                left_[static_cast<std::size_t>(i)][k] = index_of(s * elements_[k]);
                right_[static_cast<std::size_t>(i)][k] = index_of(elements_[k] * s);
            }
        }
        if (n <= kBruhatTableLimit) {
            bruhat_.assign(n, std::vector<char>(n, 0));
            for (std::size_t y = 0; y < n; ++y) {
                if (elements_[y].length() == 0) {
                    bruhat_[0][0] = 1;
                    continue;
                }
                const int s = elements_[y].word().front();
                const std::size_t sy = left(s, y);
                for (std::size_t x = 0; x < n; ++x) {
                    const std::size_t sx = left(s, x);
                    bruhat_[x][y] = (length(sx) < length(x)) ? bruhat_[sx][sy] : bruhat_[x][sy];
                }
            }
        }
    }

    const RootDatum& datum() const { return datum_; }
    std::size_t size() const { return elements_.size(); }
    const WeylElement& element(std::size_t i) const { return elements_[i]; }
    int length(std::size_t i) const { return elements_[i].length(); }

    std::size_t index_of(const WeylElement& w) const
    {
        auto it = index_.find(w.rho_image());
        if (it == index_.end()) {
            throw ContractError("element does not belong to this Weyl group");
        }
        return it->second;
    }

    std::size_t left(int s, std::size_t w) const { return left_[static_cast<std::size_t>(s)][w]; }
    std::size_t right(int s, std::size_t w) const { return right_[static_cast<std::size_t>(s)][w]; }
    bool left_descent(int s, std::size_t w) const { return length(left(s, w)) < length(w); }
    bool right_descent(int s, std::size_t w) const { return length(right(s, w)) < length(w); }

    bool bruhat_leq(std::size_t x, std::size_t y) const
    {
        if (!bruhat_.empty()) {
            return bruhat_[x][y] != 0;
        }
        return trunco::bruhat_leq(elements_[x], elements_[y]);
    }

    std::size_t longest() const { return elements_.size() - 1; }

private:
    RootDatum datum_;
    std::vector<WeylElement> elements_;
    std::map<std::vector<int>, std::size_t> index_;
    std::vector<std::vector<std::size_t>> left_;
    std::vector<std::vector<std::size_t>> right_;
    std::vector<std::vector<char>> bruhat_;
};

} // namespace trunco
