#pragma once

// Text and JSON forms of weights, characters, KL polynomials, traces and oracle reports.

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "trunco/characters.hpp"
#include "trunco/engine.hpp"
#include "trunco/kl.hpp"
#include "trunco/oracle.hpp"
#include "trunco/root_datum.hpp"
#include "trunco/trunc_weights.hpp"

namespace trunco {

using nlohmann::json;

// ---------------------------------------------------------------------------
// Text input

namespace detail {

inline std::string strip(std::string_view s)
{
    std::string out;
    for (char c : s) {
        if (!std::isspace(static_cast<unsigned char>(c))) {
            out.push_back(c);
        }
    }
    return out;
}

inline std::vector<std::string> split(const std::string& s, char sep)
{
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    out.push_back(cur);
    return out;
}

} // namespace detail

/// Parses "[3],[0]" or "[[3],[0]]"; entries are integers or "p/q".
inline TruncatedWeight parse_truncated_weight(std::string_view text)
{
    std::string s = detail::strip(text);
    if (s.size() >= 4 && s.front() == '[' && s[1] == '[' && s.back() == ']') {
        s = s.substr(1, s.size() - 2);
    }
    TruncatedWeight out;
    std::size_t pos = 0;
    while (pos < s.size()) {
        if (s[pos] != '[') {
            throw ParseError("expected '[' in weight '" + std::string(text) + "'");
        }
        const auto close = s.find(']', pos);
        if (close == std::string::npos) {
            throw ParseError("unbalanced brackets in weight '" + std::string(text) + "'");
        }
        const std::string inner = s.substr(pos + 1, close - pos - 1);
        if (inner.find('[') != std::string::npos) {
            throw ParseError("nested brackets in weight '" + std::string(text) + "'");
        }
        Weight w;
        if (!inner.empty()) {
            for (const auto& part : detail::split(inner, ',')) {
                w.coords.push_back(parse_rational(part));
            }
        }
        out.components.push_back(std::move(w));
        pos = close + 1;
        if (pos < s.size()) {
            if (s[pos] != ',') {
                throw ParseError("expected ',' between weight components in '" + std::string(text) + "'");
            }
            if (++pos == s.size()) {
                throw ParseError("trailing ',' in weight '" + std::string(text) + "'");
            }
        }
    }
    if (out.components.empty()) {
        throw ParseError("empty weight");
    }
    for (const auto& c : out.components) {
        if (c.size() != out.components.front().size()) {
            throw ParseError("weight components of different lengths in '" + std::string(text) + "'");
        }
    }
    return out;
}

/// Checks component count n+1 and rank.
inline void check_shape(const TruncatedWeight& w, int n, int rank, const std::string& name)
{
    if (w.level() != n) {
        throw ParseError(name + " has " + std::to_string(w.components.size()) + " components, expected " +
                         std::to_string(n + 1));
    }
    for (const auto& c : w.components) {
        if (c.size() != static_cast<std::size_t>(rank)) {
            throw ParseError(name + " component " + c.str() + " does not have rank " + std::to_string(rank));
        }
    }
}

/// "2,1,3,2" (1-based simple reflection indices) -> 0-based word; "" or "e" is the identity.
inline std::vector<int> parse_word(std::string_view text, int rank)
{
    const std::string s = detail::strip(text);
    std::vector<int> out;
    if (s.empty() || s == "e") {
        return out;
    }
    for (const auto& part : detail::split(s, ',')) {
        const Rational q = parse_rational(part);
        if (!is_integer(q) || q < 1 || q > rank) {
            throw ParseError("reflection index '" + part + "' out of range 1.." + std::to_string(rank));
        }
        out.push_back(static_cast<int>(q.get_num().get_si()) - 1);
    }
    return out;
}

inline RootCoords parse_root_coords(std::string_view text, int rank)
{
    std::string s = detail::strip(text);
    if (s.size() >= 2 && s.front() == '[' && s.back() == ']') {
        s = s.substr(1, s.size() - 2);
    }
    RootCoords out;
    if (!s.empty()) {
        for (const auto& part : detail::split(s, ',')) {
            const Rational q = parse_rational(part);
            if (!is_integer(q) || !q.get_num().fits_sint_p()) {
                throw ParseError("root coordinate '" + part + "' is not an integer");
            }
            out.push_back(static_cast<int>(q.get_num().get_si()));
        }
    }
    if (out.size() != static_cast<std::size_t>(rank)) {
        throw ParseError("expected " + std::to_string(rank) + " coordinates, got " + std::to_string(out.size()));
    }
    return out;
}

// ---------------------------------------------------------------------------
// JSON

inline json rational_json(const Rational& q)
{
    if (is_integer(q) && q.get_num().fits_slong_p()) {
        return q.get_num().get_si();
    }
    return to_string(q);
}

inline Rational rational_from_json(const json& j)
{
    if (j.is_number_integer()) {
        return Rational(j.get<long>());
    }
    if (j.is_string()) {
        return parse_rational(j.get<std::string>());
    }
    throw ParseError("expected an integer or a \"p/q\" string, got " + j.dump());
}

inline json weight_json(const Weight& w)
{
    json out = json::array();
    for (const auto& q : w.coords) {
        out.push_back(rational_json(q));
    }
    return out;
}

inline Weight weight_from_json(const json& j)
{
    if (!j.is_array()) {
        throw ParseError("weight must be an array");
    }
    Weight w;
    for (const auto& x : j) {
        w.coords.push_back(rational_from_json(x));
    }
    return w;
}

inline json truncated_weight_json(const TruncatedWeight& v)
{
    json out = json::array();
    for (const auto& c : v.components) {
        out.push_back(weight_json(c));
    }
    return out;
}

inline TruncatedWeight truncated_weight_from_json(const json& j)
{
    if (!j.is_array() || j.empty()) {
        throw ParseError("truncated weight must be a nonempty array of arrays");
    }
    TruncatedWeight out;
    for (const auto& c : j) {
        out.components.push_back(weight_from_json(c));
    }
    const auto r = out.rank();
    for (const auto& c : out.components) {
        if (c.size() != r) {
            throw ParseError("truncated weight components of unequal rank");
        }
    }
    return out;
}

inline json kl_json(const KLPolynomial& p) { return p.coeffs; }

inline KLPolynomial kl_from_json(const json& j)
{
    if (!j.is_array()) {
        throw ParseError("KL polynomial must be an array");
    }
    KLPolynomial p;
    for (const auto& c : j) {
        if (!c.is_number_integer() || c.get<long>() < 0) {
            throw ParseError("KL coefficients are nonnegative integers");
        }
        p.coeffs.push_back(c.get<std::int64_t>());
    }
    if (!p.coeffs.empty() && (p.coeffs.front() != 1 || p.coeffs.back() == 0)) {
        throw ParseError("nonzero KL polynomial must have constant term 1 and no trailing zeros");
    }
    return p;
}

inline json character_json(const FormalCharacter& ch)
{
    json entries = json::array();
    for (const auto& [beta, c] : ch.entries) {
        entries.push_back({beta, c});
    }
    return {{"base", weight_json(ch.base)}, {"depth", ch.depth}, {"entries", entries}};
}

inline FormalCharacter character_from_json(const json& j)
{
    FormalCharacter ch;
    ch.base = weight_from_json(j.at("base"));
    ch.depth = j.at("depth").get<int>();
    if (ch.depth < 0) {
        throw ParseError("negative character depth");
    }
    std::optional<RootCoords> prev;
    for (const auto& e : j.at("entries")) {
        const auto beta = e.at(0).get<RootCoords>();
        const auto c = e.at(1).get<std::int64_t>();
        if (beta.size() != ch.base.size() || !is_nonnegative(beta) || height(beta) > ch.depth || c <= 0) {
            throw ParseError("invalid character entry " + e.dump());
        }
        if (prev && !ConeOrder{}(*prev, beta)) {
            throw ParseError("character entries out of order");
        }
        prev = beta;
        ch.entries.emplace(beta, c);
    }
    return ch;
}

inline json block_json(const BlockDescriptor& b)
{
    json out;
    out["note"] = b.note;
    out["value"] = b.value;
    json simple = json::array();
    for (const auto& r : b.integral.simple) {
        simple.push_back(r);
    }
    out["integral_simple_roots"] = simple;
    json anti = json::array();
    for (const auto& q : b.antidominant) {
        anti.push_back(rational_json(q));
    }
    out["antidominant_pairings"] = anti;
    auto one_based = [](const std::vector<int>& w) {
        std::vector<int> o;
        for (int x : w) o.push_back(x + 1);
        return o;
    };
    out["stabilizer"] = one_based(b.stabilizer);
    out["verma_word"] = one_based(b.verma_word);
    out["simple_word"] = one_based(b.simple_word);
    out["kl_pair"] = {one_based(b.kl_x), one_based(b.kl_y)};
    out["kl_polynomial"] = kl_json(b.polynomial);
    return out;
}

/// Trace schema: {datum, lambda, nu, value, kind, [twist_word, twist_condition, levi,
/// lambda_twisted, nu_twisted, gap, terms: [{gamma, partition, child_value, child}]], [base]}.
/// Words and Levi indices are 1-based.
inline json trace_json(const TraceNode& t)
{
    json out;
    out["datum"] = t.datum.label();
    out["lambda"] = truncated_weight_json(t.lambda);
    out["nu"] = truncated_weight_json(t.nu);
    out["value"] = t.value;
    out["kind"] = to_string(t.kind);
    if (t.kind == TraceKind::Reduction || t.kind == TraceKind::NotLinked) {
        std::vector<int> w, j;
        for (int x : t.twist_word) w.push_back(x + 1);
        for (int x : t.levi) j.push_back(x + 1);
        out["twist_word"] = w;
        out["twist_condition"] = t.twist_condition;
        out["levi"] = j;
        out["lambda_twisted"] = truncated_weight_json(t.lambda_twisted);
        out["nu_twisted"] = truncated_weight_json(t.nu_twisted);
        out["gap"] = t.gap;
        out["note"] = "top component is central in the Levi after twisting and is dropped";
        json terms = json::array();
        for (const auto& term : t.terms) {
            terms.push_back({{"gamma", term.gamma},
                             {"partition", term.partition},
                             {"child_value", term.child_value},
                             {"child", term.child ? trace_json(*term.child) : json()}});
        }
        out["terms"] = terms;
    }
    if (t.base) {
        out["base"] = block_json(*t.base);
    }
    return out;
}

/// Structural validation of a trace document; returns the value it reports.
inline std::int64_t validate_trace_json(const json& j)
{
    const auto lambda = truncated_weight_from_json(j.at("lambda"));
    const auto nu = truncated_weight_from_json(j.at("nu"));
    if (lambda.components.size() != nu.components.size()) {
        throw ParseError("trace weights of different levels");
    }
    const auto value = j.at("value").get<std::int64_t>();
    if (value < 0) {
        throw ParseError("negative multiplicity in trace");
    }
    const auto kind = j.at("kind").get<std::string>();
    if (kind == to_string(TraceKind::Reduction)) {
        std::int64_t total = 0;
        for (const auto& term : j.at("terms")) {
            const auto child = validate_trace_json(term.at("child"));
            if (child != term.at("child_value").get<std::int64_t>()) {
                throw ParseError("child value mismatch in trace");
            }
            total += term.at("partition").get<std::int64_t>() * child;
        }
        if (total != value) {
            throw ParseError("trace terms do not sum to the value");
        }
    }
    if (j.contains("base")) {
        kl_from_json(j.at("base").at("kl_polynomial"));
    }
    return value;
}

inline json oracle_report_json(const SimpleCharacterResult& r)
{
    json spaces = json::array();
    for (const auto& s : r.spaces) {
        spaces.push_back({{"beta", s.beta}, {"verma_dim", s.verma_dim}, {"radical_dim", s.radical_dim}, {"simple_dim", s.simple_dim}});
    }
    return {{"spaces", spaces}, {"simple_character", character_json(r.character)}};
}

inline void validate_oracle_report_json(const json& j)
{
    const auto ch = character_from_json(j.at("simple_character"));
    for (const auto& s : j.at("spaces")) {
        const auto beta = s.at("beta").get<RootCoords>();
        const auto m = s.at("verma_dim").get<std::int64_t>();
        const auto rad = s.at("radical_dim").get<std::int64_t>();
        const auto l = s.at("simple_dim").get<std::int64_t>();
        if (m != rad + l || l != ch.at(beta)) {
            throw ParseError("inconsistent oracle report at " + to_string(beta));
        }
    }
}

} // namespace trunco
