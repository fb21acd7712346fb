#include <gtest/gtest.h>

#include "webiso/error.hpp"
#include "webiso/report.hpp"

using namespace webiso;

TEST(WebJson, DefaultsAndRoundTrip) {
  const WebSpec w = web_from_json(json::parse(R"j({"n": 3, "f": "x1 + x2*x3"})j"));
  EXPECT_EQ(w.n(), 3u);
  EXPECT_EQ(w.order(), 8);
  EXPECT_EQ(w.base(), Point(3, Rational(0)));
  const WebSpec back = web_from_json(web_to_json(w));
  EXPECT_EQ(to_text(back.f()), to_text(w.f()));
  EXPECT_EQ(back.base(), w.base());
}

TEST(WebJson, BaseOrderAndOverride) {
  const json j = json::parse(R"j({"n": 2, "f": "x1 + x2", "base": ["1/2", -3], "order": 6})j");
  const WebSpec w = web_from_json(j);
  EXPECT_EQ(w.base(), (Point{Rational(1, 2), Rational(-3)}));
  EXPECT_EQ(w.order(), 6);
  EXPECT_EQ(web_from_json(j, 10).order(), 10);
}

TEST(WebJson, TreeForm) {
  const json tree = to_json(parse_expression("x1*exp(x2)", 2));
  const WebSpec w = web_from_json({{"n", 2}, {"f", tree}});
  EXPECT_EQ(to_text(w.f()), to_text(parse_expression("x1*exp(x2)", 2)));
}

TEST(WebJson, Errors) {
  EXPECT_THROW(web_from_json(json::parse(R"j({"f": "x1"})j")), ParseError);
  EXPECT_THROW(web_from_json(json::parse(R"j({"n": 2})j")), ParseError);
  EXPECT_THROW(web_from_json(json::parse(R"j({"n": 1, "f": "x1"})j")), InvalidWebError);
  EXPECT_THROW(web_from_json(json::parse(R"j({"n": 2, "f": "x1 + x3"})j")), ParseError);
  EXPECT_THROW(web_from_json(json::parse(R"j({"n": 2, "f": "x1", "base": [0.5, 0]})j")), ParseError);
  EXPECT_THROW(web_from_json(json::parse("[1, 2]")), ParseError);
}

TEST(FieldJson, RoundTrip) {
  const WebSpec w = web_from_json(json::parse(R"j({"n": 2, "f": "x1 + x2", "base": ["1", "2"]})j"));
  const DiagonalField x = field_from_json(json::parse(R"j({"components": [["1", 0, "1/3"], []]})j"), w);
  EXPECT_EQ(x.n(), 2u);
  const json j = to_json(x);
  EXPECT_EQ(j["components"][0], json::parse(R"j(["1", "0", "1/3"])j"));
  EXPECT_EQ(j["components"][1], json::parse(R"j(["0"])j"));
  EXPECT_EQ(field_from_json(j, w), x);
  EXPECT_THROW(field_from_json(json::parse(R"j({"components": 3})j"), w), ParseError);
}

TEST(ReportJson, HeaderAndDump) {
  const json h = report_header(10, 9);
  EXPECT_EQ(h["W"], 10);
  EXPECT_EQ(h["D"], 9);
  EXPECT_EQ(h["version"], version());
  EXPECT_TRUE(h["flags"].contains("exactness_bound"));
  const std::string s = dump(json{{"a", 1}});
  EXPECT_EQ(s.back(), '\n');
}

TEST(ReportJson, AnalysisSections) {
  const WebSpec w = web_from_json(json::parse(R"j({"n": 3, "f": "(x2*x3+x3*x1-2*x1*x2)/(x1+x2-2*x3)", "base": [0, 1, 2], "order": 10})j"));
  const json j = to_json(analyze_web(w));
  EXPECT_EQ(j["symmetries"]["dim"], 3);
  EXPECT_EQ(j["decomposition"]["S"], 1);
  EXPECT_EQ(j["routes"]["agree"], true);
  EXPECT_EQ(j["parallelizability"]["verdict"], "not parallelizable");
  EXPECT_EQ(j["blocks"]["sl2_blocks"][0]["columns"], json::parse("[1, 2, 3]"));
  EXPECT_TRUE(j["alarms"].empty());
}
