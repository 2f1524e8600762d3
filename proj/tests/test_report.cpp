#include "pctlab/report.hpp"

#include <gtest/gtest.h>

using namespace pctlab;
using json = nlohmann::ordered_json;

TEST(Json, SeventeenDigitNumbers) {
  const std::string s = dump_json(json{{"x", 0.1}, {"v", json::array({1.0 / 3.0, 2})}}, 2);
  EXPECT_NE(s.find("0.10000000000000001"), std::string::npos) << s;
  EXPECT_NE(s.find("0.33333333333333331"), std::string::npos) << s;
  EXPECT_EQ(json::parse(s)["x"].get<double>(), 0.1);
  EXPECT_EQ(dump_json(json{{"a", 1}}, 0), "{\"a\":1}");
}

TEST(Json, KeyOrderPreserved) {
  json j;
  j["zeta"] = 1;
  j["alpha"] = 2;
  const std::string s = dump_json(j);
  EXPECT_LT(s.find("zeta"), s.find("alpha"));
}

TEST(Report, ClassificationJsonContract) {
  RunConfig cfg;
  const ClassificationReport rep = classify_equation(catalog_equation("chi_plus"), cfg.solve_options());
  const json j = json::parse(dump_json(to_json(rep)));
  EXPECT_EQ(j["equation"], "chi_plus");
  EXPECT_TRUE(j["agreement"].get<bool>());
  EXPECT_TRUE(j["coherent"].get<bool>());
  ASSERT_EQ(j["elements"].size(), 32u);
  for (const auto& e : j["elements"]) {
    for (const char* key : {"label", "invariant", "residual", "certificate", "nullity", "matrix"})
      EXPECT_TRUE(e.contains(key)) << key;
    if (e["invariant"].get<bool>()) {
      ASSERT_EQ(e["matrix"].size(), 2u);
      EXPECT_EQ(e["matrix"][0][0].size(), 2u);
    } else {
      EXPECT_TRUE(e["matrix"].is_null());
    }
  }
  const std::string md = to_markdown(rep);
  for (const auto& e : j["elements"]) EXPECT_NE(md.find("| " + e["label"].get<std::string>() + " |"), std::string::npos);
}

TEST(Report, DeterministicOutput) {
  RunConfig cfg;
  auto render = [&] {
    return dump_json(to_json(classify_equation(catalog_equation("flat_plus", cfg.catalog()), cfg.solve_options())));
  };
  EXPECT_EQ(render(), render());
}

TEST(Report, CheckListJson) {
  const CheckList checks{make_check("a", 1e-12, 1e-9), make_check("b", 1.0, 1e-9), make_info("c", 5.0, "note")};
  const json j = to_json(checks);
  EXPECT_FALSE(j["passed"].get<bool>());
  EXPECT_TRUE(j["checks"][2]["tol"].is_null());
  EXPECT_EQ(j["checks"][2]["note"], "note");
  EXPECT_NE(to_markdown(checks, "t").find("FAIL"), std::string::npos);
}

TEST(Report, VerifyAllPasses) {
  const CheckList checks = verify_all(RunConfig{});
  for (const auto& c : checks)
    if (!c.informational) {
      EXPECT_TRUE(c.passed) << c.name << " " << c.residual;
    }
}

TEST(Report, CorruptionFailsVerifyAll) {
  RunConfig cfg;
  cfg.corrupt_chi = true;
  EXPECT_FALSE(all_passed(verify_all(cfg)));
}

TEST(Report, ContentString) {
  const IrrepLabel a{-1, -0.5}, b{1, 0.5};
  EXPECT_EQ(content_string({a, b}), "{" + a.str() + ", " + b.str() + "}");
}
