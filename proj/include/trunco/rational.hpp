#pragma once

// Exact rational scalars and the error types shared across the library.

#include <gmpxx.h>

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace trunco {

using Rational = mpq_class;

/// Malformed user input: Cartan types, weights, words, JSON documents.
struct ParseError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A documented precondition of an operation was violated by the caller.
struct ContractError : std::logic_error {
    using std::logic_error::logic_error;
};

/// Character arithmetic produced a negative residual; some simple character
/// handed to the decomposition was wrong.
struct InconsistencyError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A brute-force construction would exceed its size budget.
struct ResourceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Reached a state that a proven mathematical fact rules out.
struct InternalError : std::logic_error {
    using std::logic_error::logic_error;
};

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

inline std::string to_string(const Rational& q)
{
    if (is_integer(q)) {
        return q.get_num().get_str();
    }
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

/// Accepts "p", "-p", "p/q" with optional surrounding whitespace.
inline Rational parse_rational(std::string_view text)
{
    std::string s;
    for (char c : text) {
        if (!std::isspace(static_cast<unsigned char>(c))) {
            s.push_back(c);
        }
    }
    if (s.empty()) {
        throw ParseError("empty rational literal");
    }
    const auto slash = s.find('/');
    auto valid_int = [](const std::string& t) {
        std::size_t i = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
        if (i >= t.size()) {
            return false;
        }
        return std::all_of(t.begin() + static_cast<std::ptrdiff_t>(i), t.end(),
                           [](char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; });
    };
    const std::string num = s.substr(0, slash);
    const std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (!valid_int(num) || !valid_int(den) || den.find_first_of("+-") != std::string::npos) {
        throw ParseError("malformed rational literal '" + std::string(text) + "'");
    }
    mpz_class n(num[0] == '+' ? num.substr(1) : num, 10);
    mpz_class d(den, 10);
    if (d == 0) {
        throw ParseError("zero denominator in '" + std::string(text) + "'");
    }
    Rational q(n, d);
    q.canonicalize();
    return q;
}

inline std::string join_rationals(const std::vector<Rational>& v, std::string_view sep = ",")
{
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) {
            out += sep;
        }
        out += to_string(v[i]);
    }
    return out;
}

/// Hash for vectors of small integers (root coordinates, PBW monomials).
struct IntVectorHash {
    std::size_t operator()(const std::vector<int>& v) const noexcept
    {
        std::size_t h = 0xcbf29ce484222325ULL ^ v.size();
        for (int x : v) {
            h ^= static_cast<std::size_t>(static_cast<unsigned>(x)) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        }
        return h;
    }
};

} // namespace trunco
