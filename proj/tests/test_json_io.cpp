#include <gtest/gtest.h>

#include "trunco/engine.hpp"
#include "trunco/json_io.hpp"

using namespace trunco;

TEST(Parse, TruncatedWeights)
{
    const auto v = parse_truncated_weight("[3],[0]");
    EXPECT_EQ(v.level(), 1);
    EXPECT_EQ(v[0], Weight{3});
    EXPECT_EQ(parse_truncated_weight("[[1, -2], [1/2, 0]]")[1], Weight(std::vector<Rational>{Rational(1, 2), 0}));
    for (const char* bad : {"", "[1,2],[3]", "[a]", "[1/0]", "3", "[1],", "[[1]"}) {
        EXPECT_THROW(parse_truncated_weight(bad), ParseError) << bad;
    }
    EXPECT_THROW(check_shape(v, 2, 1, "lambda"), ParseError);
    EXPECT_THROW(check_shape(v, 1, 2, "lambda"), ParseError);
    EXPECT_NO_THROW(check_shape(v, 1, 1, "lambda"));
}

TEST(Parse, WordsAndRootCoords)
{
    EXPECT_EQ(parse_word("2,1,3,2", 3), (std::vector<int>{1, 0, 2, 1}));
    EXPECT_TRUE(parse_word("e", 3).empty());
    EXPECT_TRUE(parse_word("", 3).empty());
    EXPECT_THROW(parse_word("4", 3), ParseError);
    EXPECT_THROW(parse_word("0", 3), ParseError);
    EXPECT_EQ(parse_root_coords("[1,1]", 2), (RootCoords{1, 1}));
    EXPECT_THROW(parse_root_coords("1", 2), ParseError);
    EXPECT_THROW(parse_root_coords("1,x", 2), ParseError);
}

TEST(Json, RoundTrips)
{
    const Rational q(-3, 4);
    EXPECT_EQ(rational_from_json(rational_json(q)), q);
    EXPECT_EQ(rational_json(Rational(5)), json(5));
    const TruncatedWeight v({Weight{1, -2}, Weight(std::vector<Rational>{Rational(1, 3), 0})});
    EXPECT_EQ(truncated_weight_from_json(truncated_weight_json(v)), v);
    KLPolynomial p;
    p.coeffs = {1, 2, 1};
    EXPECT_EQ(kl_from_json(kl_json(p)), p);
    const auto ch = verma_character(build_root_datum("A2"), v, 3);
    EXPECT_EQ(character_from_json(character_json(ch)), ch);
}

TEST(Json, RejectsMalformedDocuments)
{
    EXPECT_THROW(rational_from_json(json(1.5)), ParseError);
    EXPECT_THROW(truncated_weight_from_json(json::array({json::array({1}), json::array({1, 2})})), ParseError);
    EXPECT_THROW(kl_from_json(json::array({0, 1})), ParseError);
    EXPECT_THROW(kl_from_json(json::array({1, -1})), ParseError);
    json ch = character_json(verma_character(build_root_datum("A1"), TruncatedWeight({Weight{0}}), 2));
    ch["entries"][0][1] = -1;
    EXPECT_THROW(character_from_json(ch), ParseError);
}

TEST(Json, TraceDocumentsValidate)
{
    const RootDatum a2 = build_root_datum("A2");
    Engine engine;
    const TruncatedWeight lam({Weight{1, 2}, Weight{0, 0}});
    const auto t = engine.multiplicity_trace(a2, lam, lam.with_base(Weight{-2, -1}));
    const json doc = trace_json(*t);
    EXPECT_EQ(validate_trace_json(doc), t->value);
    EXPECT_EQ(doc.at("kind"), "Levi reduction");
    json bad = doc;
    bad["value"] = t->value + 1;
    EXPECT_THROW(validate_trace_json(bad), ParseError);
}

TEST(Json, OracleReportValidates)
{
    const RootDatum a1 = build_root_datum("A1");
    const auto report = simple_character_report(TruncatedModule(a1, TruncatedWeight({Weight{1}, Weight{0}}), 3));
    json doc = oracle_report_json(report);
    EXPECT_NO_THROW(validate_oracle_report_json(doc));
    doc["spaces"][1]["simple_dim"] = 7;
    EXPECT_THROW(validate_oracle_report_json(doc), ParseError);
}
