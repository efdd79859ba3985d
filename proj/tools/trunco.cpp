// trunco: command-line front end for the multiplicity engine, the brute-force
// oracle, KL polynomials, partition functions and Verma characters.

#include <cstdlib>
#include <iostream>
#include <random>
#include <string>

#include "CLI11.hpp"
#include "trunco/trunco.hpp"

namespace {

using namespace trunco;

constexpr int kExitParse = 2;
constexpr int kExitMismatch = 3;
constexpr int kExitResource = 4;

struct Options {
    std::string type;
    int n = 0;
    std::string lambda;
    std::string nu;
    int depth = -1;
    bool trace = false;
    bool verify = false;
    bool json = false;
    unsigned seed = 1;
    std::string x;
    std::string y;
    std::string beta;
    int samples = 40;
};

const char* cache_dir()
{
    const char* dir = std::getenv("TRUNCO_CACHE_DIR");
    return (dir && *dir) ? dir : nullptr;
}

RootDatum load_datum(const Options& o)
{
    RootDatum d = build_root_datum(o.type);
    if (const char* dir = cache_dir()) {
        load_kl_cache(dir, d);
    }
    return d;
}

TruncatedWeight read_weight(const std::string& text, const Options& o, const RootDatum& d, const std::string& name)
{
    TruncatedWeight w = parse_truncated_weight(text);
    check_shape(w, o.n, d.rank(), name);
    return w;
}

std::string beta_str(const RootCoords& b) { return to_string(b); }

int cmd_mult(const Options& o)
{
    const RootDatum d = load_datum(o);
    const TruncatedWeight lambda = read_weight(o.lambda, o, d, "--lambda");
    const TruncatedWeight nu = read_weight(o.nu, o, d, "--nu");
    Engine engine;
    const TracePtr t = engine.multiplicity_trace(d, lambda, nu);
    std::optional<std::int64_t> oracle;
    if (o.verify) {
        int depth = o.depth;
        if (depth < 0) {
            auto gap = dominance_gap(d, nu.base(), lambda.base());
            depth = gap ? height(*gap) : 0;
        }
        oracle = oracle_multiplicity(d, lambda, nu, depth);
    }
    if (o.json) {
        json out{{"type", o.type}, {"n", o.n}, {"lambda", truncated_weight_json(lambda)},
                 {"nu", truncated_weight_json(nu)}, {"value", t->value}, {"kind", to_string(t->kind)}};
        if (o.trace) {
            out["trace"] = trace_json(*t);
        }
        if (oracle) {
            out["oracle"] = *oracle;
            out["agree"] = *oracle == t->value;
        }
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << t->value;
        if (t->kind == TraceKind::DifferentBlock) {
            std::cout << "  (different Jordan block)";
        }
        std::cout << "\n";
        if (o.trace) {
            std::cout << trace_json(*t).dump(2) << "\n";
        }
        if (oracle) {
            std::cout << "oracle: " << *oracle << (*oracle == t->value ? "  (agree)" : "  (MISMATCH)") << "\n";
        }
    }
    return oracle && *oracle != t->value ? kExitMismatch : 0;
}

int cmd_table(const Options& o)
{
    const RootDatum d = load_datum(o);
    const TruncatedWeight lambda = read_weight(o.lambda, o, d, "--lambda");
    const int depth = o.depth < 0 ? 4 : o.depth;
    Engine engine;
    const auto table = engine.multiplicity_table(d, lambda, depth);
    std::optional<std::map<Weight, std::int64_t>> oracle;
    if (o.verify) {
        SimpleCharacterCache cache(d);
        oracle = oracle_decomposition(d, lambda, depth, cache);
    }
    bool agree = true;
    if (oracle) {
        std::map<Weight, std::int64_t> engine_by_weight;
        for (const auto& [beta, v] : table) {
            engine_by_weight[lambda.base() - d.root_to_weight(beta)] = v;
        }
        agree = engine_by_weight == *oracle;
    }
    if (o.json) {
        json entries = json::array();
        for (const auto& [beta, v] : table) {
            entries.push_back({{"beta", beta}, {"nu0", weight_json(lambda.base() - d.root_to_weight(beta))}, {"value", v}});
        }
        json out{{"type", o.type}, {"n", o.n}, {"lambda", truncated_weight_json(lambda)}, {"depth", depth}, {"entries", entries}};
        if (oracle) {
            out["agree"] = agree;
        }
        std::cout << out.dump(2) << "\n";
    } else {
        for (const auto& [beta, v] : table) {
            std::cout << (lambda.base() - d.root_to_weight(beta)).str() << "  beta=" << beta_str(beta) << "  " << v << "\n";
        }
        if (oracle) {
            std::cout << "oracle: " << (agree ? "agree" : "MISMATCH") << "\n";
        }
    }
    return agree ? 0 : kExitMismatch;
}

int cmd_kl(const Options& o)
{
    const RootDatum d = load_datum(o);
    const WeylElement x = WeylElement::from_word(d, parse_word(o.x, d.rank()));
    const WeylElement y = WeylElement::from_word(d, parse_word(o.y, d.rank()));
    const KLPolynomial p = kl_polynomial(x, y);
    if (o.json) {
        std::cout << json{{"type", o.type}, {"x", o.x}, {"y", o.y}, {"polynomial", kl_json(p)}}.dump(2) << "\n";
    } else {
        std::cout << p.str() << "\n";
    }
    return 0;
}

int cmd_partition(const Options& o)
{
    const RootDatum d = build_root_datum(o.type);
    const RootCoords beta = parse_root_coords(o.beta, d.rank());
    if (!is_nonnegative(beta)) {
        throw ParseError("--beta must have nonnegative coordinates");
    }
    const auto p = kostant_partition(d, beta);
    if (o.json) {
        std::cout << json{{"type", o.type}, {"beta", beta}, {"partitions", p}}.dump(2) << "\n";
    } else {
        std::cout << p << "\n";
    }
    return 0;
}

int cmd_character(const Options& o)
{
    const RootDatum d = build_root_datum(o.type);
    const TruncatedWeight lambda = read_weight(o.lambda, o, d, "--lambda");
    const int depth = o.depth < 0 ? 4 : o.depth;
    const FormalCharacter ch = verma_character(d, lambda, depth);
    if (verma_character_direct(d, lambda, depth) != ch) {
        std::cerr << "internal: character routes disagree\n";
        return 1;
    }
    if (o.json) {
        std::cout << character_json(ch).dump(2) << "\n";
    } else {
        std::string coeffs;
        for (const auto& [beta, c] : ch.entries) {
            coeffs += (coeffs.empty() ? "" : ",") + std::to_string(c);
        }
        std::cout << "coefficients: " << coeffs << "\n";
        for (const auto& [beta, c] : ch.entries) {
            std::cout << beta_str(beta) << "  " << c << "\n";
        }
    }
    return 0;
}

int cmd_oracle(const Options& o)
{
    const RootDatum d = build_root_datum(o.type);
    const TruncatedWeight lambda = read_weight(o.lambda, o, d, "--lambda");
    int depth = o.depth < 0 ? 3 : o.depth;
    std::optional<TruncatedWeight> nu;
    if (!o.nu.empty()) {
        nu = read_weight(o.nu, o, d, "--nu");
        if (auto gap = dominance_gap(d, nu->base(), lambda.base()); gap && o.depth < 0) {
            depth = height(*gap);
        }
    }
    const TruncatedModule M(d, lambda, depth);
    const SimpleCharacterResult r = simple_character_report(M);
    std::optional<std::int64_t> mult;
    if (nu) {
        mult = oracle_multiplicity(d, lambda, *nu, depth);
    }
    if (o.json) {
        json out = oracle_report_json(r);
        out["verma_character"] = character_json(verma_character(d, lambda, depth));
        if (mult) {
            out["multiplicity"] = *mult;
        }
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "beta  dim M  dim radical  dim L\n";
        for (const auto& s : r.spaces) {
            std::cout << beta_str(s.beta) << "  " << s.verma_dim << "  " << s.radical_dim << "  " << s.simple_dim << "\n";
        }
        if (mult) {
            std::cout << "multiplicity: " << *mult << "\n";
        }
    }
    return 0;
}

// Engine against oracle on sampled A1/A2 queries.
int cmd_verify_suite(const Options& o)
{
    std::mt19937 rng(o.seed);
    int checked = 0;
    int mismatches = 0;
    struct Case {
        const char* type;
        int n;
    };
    const Case cases[] = {{"A1", 1}, {"A1", 2}, {"A2", 1}};
    for (const auto& c : cases) {
        const RootDatum d = build_root_datum(c.type);
        Engine engine;
        SimpleCharacterCache cache(d);
        std::uniform_int_distribution<int> coord(0, 3);
        std::uniform_int_distribution<int> tail(-1, 2);
        for (int s = 0; s < o.samples; ++s) {
            TruncatedWeight lambda;
            for (int i = 0; i <= c.n; ++i) {
                Weight w;
                for (int j = 0; j < d.rank(); ++j) {
                    w.coords.emplace_back(i == 0 ? coord(rng) : (i == c.n ? tail(rng) : 0));
                }
                lambda.components.push_back(w);
            }
            const int depth = 4;
            const auto oracle = oracle_decomposition(d, lambda, depth, cache);
            for (const auto& beta : cone_vectors(d.rank(), depth)) {
                const Weight nu0 = lambda.base() - d.root_to_weight(beta);
                const auto e = engine.multiplicity(d, lambda, lambda.with_base(nu0));
                const auto it = oracle.find(nu0);
                const std::int64_t v = it == oracle.end() ? 0 : it->second;
                ++checked;
                if (e != v) {
                    ++mismatches;
                    std::cout << "MISMATCH " << c.type << " lambda=" << lambda.str() << " nu0=" << nu0.str()
                              << " engine=" << e << " oracle=" << v << "\n";
                }
            }
        }
    }
    if (o.json) {
        std::cout << json{{"seed", o.seed}, {"checked", checked}, {"mismatches", mismatches}}.dump(2) << "\n";
    } else {
        std::cout << "checked " << checked << " queries, " << mismatches << " mismatches (seed " << o.seed << ")\n";
    }
    return mismatches == 0 ? 0 : kExitMismatch;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"trunco: composition multiplicities for truncated current Lie algebras"};
    app.require_subcommand(1);
    Options o;

    auto add_common = [&](CLI::App* sub, bool weights) {
        sub->add_option("--type", o.type, "Cartan type, e.g. A2, B3, A1xA1")->required();
        sub->add_flag("--json", o.json, "JSON output");
        if (weights) {
            sub->add_option("--n", o.n, "truncation level n")->check(CLI::NonNegativeNumber);
            sub->add_option("--lambda", o.lambda, "highest weight, e.g. \"[3],[0]\" (fundamental coordinates)")->required();
        }
    };

    auto* mult = app.add_subcommand("mult", "engine multiplicity [M_lambda : L_nu]");
    add_common(mult, true);
    mult->add_option("--nu", o.nu, "weight of the simple module")->required();
    mult->add_flag("--trace", o.trace, "print the evaluation trace");
    mult->add_flag("--verify", o.verify, "cross-check with the brute-force oracle");
    mult->add_option("--depth", o.depth, "oracle depth (default ht(lambda_0 - nu_0))");

    auto* table = app.add_subcommand("table", "all nonzero multiplicities down to a depth");
    add_common(table, true);
    table->add_option("--depth", o.depth, "maximal height of lambda_0 - nu_0 (default 4)");
    table->add_flag("--verify", o.verify, "cross-check with the brute-force oracle");

    auto* kl = app.add_subcommand("kl", "Kazhdan-Lusztig polynomial P_{x,y}");
    add_common(kl, false);
    kl->add_option("--x", o.x, "word of x, 1-based, e.g. \"2\"")->required();
    kl->add_option("--y", o.y, "word of y, 1-based, e.g. \"2,1,3,2\"")->required();

    auto* part = app.add_subcommand("partition", "Kostant partition function");
    add_common(part, false);
    part->add_option("--beta", o.beta, "coordinates over the simple roots, e.g. \"1,1\"")->required();

    auto* chr = app.add_subcommand("character", "Verma character to a depth");
    add_common(chr, true);
    chr->add_option("--depth", o.depth, "depth (default 4)");

    auto* orc = app.add_subcommand("oracle", "brute-force Verma module report");
    add_common(orc, true);
    orc->add_option("--nu", o.nu, "also report [M_lambda : L_nu]");
    orc->add_option("--depth", o.depth, "depth (default 3, or ht(lambda_0 - nu_0))");

    auto* suite = app.add_subcommand("verify-suite", "sampled engine/oracle comparison");
    suite->add_flag("--json", o.json, "JSON output");
    suite->add_option("--seed", o.seed, "random seed");
    suite->add_option("--samples", o.samples, "weights sampled per case")->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : kExitParse;
    }

    try {
        int rc = 0;
        if (*mult) rc = cmd_mult(o);
        else if (*table) rc = cmd_table(o);
        else if (*kl) rc = cmd_kl(o);
        else if (*part) rc = cmd_partition(o);
        else if (*chr) rc = cmd_character(o);
        else if (*orc) rc = cmd_oracle(o);
        else if (*suite) rc = cmd_verify_suite(o);
        if (const char* dir = cache_dir()) {
            save_kl_cache(dir);
        }
        return rc;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const ContractError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const InconsistencyError& e) {
        std::cerr << "inconsistency: " << e.what() << "\n";
        return kExitMismatch;
    } catch (const ResourceError& e) {
        std::cerr << "resource limit: " << e.what() << "\n";
        return kExitResource;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}
