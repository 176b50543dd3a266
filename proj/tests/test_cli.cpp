// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <regex>
#include <sstream>

#include "cli.hpp"
#include "support.hpp"

namespace fs = std::filesystem;
using bhix::cli::json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
  json data() const { return json::parse(out); }
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = bhix::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

class CliFiles : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("bhix_cli_" + std::to_string(::getpid()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string write(const std::string& name, const std::string& body) {
    const auto p = dir_ / name;
    std::ofstream(p) << body;
    return p.string();
  }

  fs::path dir_;
};

}  // namespace

TEST(CliCompute, StarFamily) {
  const auto r = run({"compute", "--family", "star", "--n", "4"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = r.data();
  EXPECT_EQ(j["bh_spectral"].get<double>(), 8.25);
  EXPECT_EQ(j["kirchhoff"].get<double>(), 9.0);
  EXPECT_EQ(j["tau"].get<long>(), 1);
  EXPECT_EQ(j["bh_closed_form_exact"], "33/4");
  for (const auto& key : bhix::cli::index_names()) EXPECT_TRUE(j.contains(key)) << key;
}

TEST(CliCompute, Graph6) {
  const auto r = run({"compute", "--graph6", "A_"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.data()["bh_spectral"].get<double>(), 0.5);
  EXPECT_EQ(r.data()["n"], 2);
}

TEST(CliCompute, NumbersHaveTwelveDigits) {
  const auto j = run({"compute", "--family", "path", "--n", "7"}).data();
  const double bh = j["bh_spectral"].get<double>();
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", bh);
  EXPECT_EQ(bh, std::strtod(buf, nullptr));
}

TEST(CliOutput, NoNumberExceedsTwelveDigits) {
  // Grisu-style printers emit 2.7366280180500002 for one of these slacks
  const auto r = run({"verify-bounds", "--family", "cycle", "--n", "6", "--p", "1/2,3"});
  const std::regex decimal(R"(-?\d+\.(\d+))");
  for (std::sregex_iterator it(r.out.begin(), r.out.end(), decimal), end; it != end; ++it) {
    std::string digits = (*it)[0].str();
    digits.erase(std::remove_if(digits.begin(), digits.end(), [](char c) { return c == '-' || c == '.'; }),
                 digits.end());
    digits.erase(0, digits.find_first_not_of('0'));
    EXPECT_LE(digits.size(), 12U) << (*it)[0];
  }
}

TEST(CliCompute, IndexFilter) {
  const auto j = run({"compute", "--family", "complete", "--n", "4", "--index", "tau,wiener"}).data();
  EXPECT_EQ(j["tau"], 16);
  EXPECT_EQ(j["wiener"], 6);
  EXPECT_FALSE(j.contains("bh_spectral"));
  EXPECT_EQ(run({"compute", "--family", "path", "--n", "3", "--index", "nope"}).code, 2);
}

TEST(CliCompute, FireflyByOrder) {
  const auto j = run({"compute", "--family", "firefly", "--s", "0", "--t", "1", "--n", "5"}).data();
  EXPECT_EQ(j["bh_closed_form_exact"], "124/5");
  EXPECT_EQ(j["bh_spectral"].get<double>(), 24.8);
}

TEST(CliCompute, CsvAndText) {
  const auto csv = run({"compute", "--graph6", "A_", "--format", "csv"});
  ASSERT_EQ(csv.code, 0);
  EXPECT_EQ(csv.out.substr(0, csv.out.find(',')), "n");
  EXPECT_EQ(std::count(csv.out.begin(), csv.out.end(), '\n'), 2);
  const auto text = run({"compute", "--graph6", "A_", "--format", "text"});
  EXPECT_NE(text.out.find("bh_spectral: 0.5"), std::string::npos);
}

TEST_F(CliFiles, MalformedEdgeList) {
  const auto r = run({"compute", "--edges", write("bad.txt", "3 x\n")});
  EXPECT_EQ(r.code, 2);
  EXPECT_TRUE(r.out.empty());
  EXPECT_FALSE(r.err.empty());
}

TEST_F(CliFiles, EdgeListAndGraph6File) {
  EXPECT_EQ(run({"compute", "--edges", write("p3.txt", "3 2\n0 1\n1 2\n")}).data()["wiener"], 4);
  EXPECT_EQ(run({"compute", "--g6-file", write("k2.g6", "A_\n")}).data()["bh_spectral"].get<double>(), 0.5);
}

TEST(CliCompute, ParseErrors) {
  EXPECT_EQ(run({"compute", "--graph6", ""}).code, 2);
  EXPECT_EQ(run({"compute", "--graph6", "A_", "--family", "star", "--n", "3"}).code, 2);
  EXPECT_EQ(run({"compute"}).code, 2);
  EXPECT_EQ(run({"compute", "--family", "wheel", "--n", "5"}).code, 2);
  EXPECT_EQ(run({"compute", "--family", "double_star", "--a", "0", "--b", "1"}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(CliCompute, Disconnected) {
  // two disjoint edges
  const std::string g6 = bhix::to_graph6(bhix::Graph::from_edge_list(4, {{0, 1}, {2, 3}}));
  const auto all = run({"compute", "--graph6", g6});
  ASSERT_EQ(all.code, 0);
  const auto j = all.data();
  EXPECT_EQ(j["tau"], 0);
  EXPECT_EQ(j["zagreb_m1"], 4);
  EXPECT_FALSE(j.contains("wiener"));
  EXPECT_FALSE(j.contains("bh_spectral"));
  EXPECT_EQ(run({"compute", "--graph6", g6, "--index", "bh_spectral"}).code, 3);
  EXPECT_EQ(run({"compute", "--graph6", g6, "--index", "zagreb_m1,tau"}).code, 0);
}

TEST(CliVerify, CompleteGraphEqualities) {
  const auto r = run({"verify-bounds", "--family", "complete", "--n", "5"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = r.data();
  EXPECT_EQ(j["violations"], 0);
  for (const auto& b : j["bounds"]) EXPECT_TRUE(b["equality"].get<bool>()) << b["id"];
}

TEST(CliVerify, PathWithCustomGrid) {
  const auto r = run({"verify-bounds", "--family", "path", "--n", "4", "--p", "1,2"});
  ASSERT_EQ(r.code, 0);
  const auto j = r.data();
  EXPECT_EQ(j["bounds"].size(), 10U);
  for (const auto& b : j["bounds"]) {
    EXPECT_TRUE(b["holds"].get<bool>());
    EXPECT_FALSE(b["equality"].get<bool>());
  }
}

TEST(CliVerify, FractionalExponents) {
  const auto j = run({"verify-bounds", "--family", "star", "--n", "4", "--p", "1/3"}).data();
  EXPECT_NEAR(j["bounds"][2]["p"].get<double>(), 1.0 / 3.0, 1e-12);
  EXPECT_EQ(run({"verify-bounds", "--family", "star", "--n", "4", "--p", "0"}).code, 2);
  EXPECT_EQ(run({"verify-bounds", "--family", "star", "--n", "4", "--p", "-1"}).code, 2);
}

TEST(CliVerify, Exhaustive) {
  const auto r = run({"verify-bounds", "--exhaustive", "--n", "6", "--workers", "2"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = r.data();
  EXPECT_EQ(j["violation_count"], 0);
  EXPECT_EQ(j["graphs"], 26704);
  EXPECT_EQ(j["tallies"]["T3_3[p=1]"]["equality"], 1);
}

TEST(CliVerify, ExhaustiveRangeReportsViolation) {
  const auto r = run({"verify-bounds", "--exhaustive", "--n-min", "3", "--n", "3"});
  EXPECT_EQ(r.code, 4);
  EXPECT_EQ(r.data()["violations"][0]["bound"], "T4_3");
}

TEST(CliVerify, ExhaustiveCsvRowsAreDeterministic) {
  const auto a = run({"verify-bounds", "--exhaustive", "--n", "4", "--format", "csv", "--workers", "1"});
  const auto b = run({"verify-bounds", "--exhaustive", "--n", "4", "--format", "csv", "--workers", "3"});
  ASSERT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(std::count(a.out.begin(), a.out.end(), '\n'), 39);  // header + 38 graphs
}

TEST(CliVerify, Errors) {
  EXPECT_EQ(run({"verify-bounds", "--exhaustive", "--n", "9"}).code, 5);
  EXPECT_EQ(run({"verify-bounds", "--graph6", "Bw"}).code, 0);
  EXPECT_EQ(run({"verify-bounds", "--graph6", "B?"}).code, 3);
  EXPECT_EQ(run({"verify-bounds", "--exhaustive", "--n", "4", "--workers", "0"}).code, 2);
}

TEST(CliVerify, SingleGraphViolationExitCode) {
  const auto r = run({"verify-bounds", "--family", "path", "--n", "3"});
  EXPECT_EQ(r.code, 4);
  EXPECT_EQ(r.data()["violations"], 1);
}

TEST(CliScan, Trees) {
  const auto r = run({"scan", "trees", "--n", "10"});
  ASSERT_EQ(r.code, 0);
  const auto j = r.data();
  EXPECT_TRUE(j["conjecture_verified"].get<bool>());
  EXPECT_EQ(j["tree_count"], 106);
  EXPECT_TRUE(j["min_is_star"].get<bool>());
  EXPECT_TRUE(j["max_is_path"].get<bool>());
  EXPECT_EQ(run({"scan", "trees", "--n", "19"}).code, 5);
  EXPECT_EQ(run({"scan", "trees", "--n", "3"}).code, 2);
}

TEST(CliScan, DiameterTwo) {
  const auto r = run({"scan", "diameter2", "--n", "5"});
  ASSERT_EQ(r.code, 0);
  EXPECT_TRUE(r.data()["verified"].get<bool>());
  EXPECT_LT(r.data()["max_non_star_value"].get<double>(), 15.2);
  EXPECT_EQ(run({"scan", "diameter2", "--n", "8"}).code, 5);
}

TEST(CliScan, ThresholdAndFamilies) {
  EXPECT_EQ(run({"scan", "t52", "--n", "10"}).code, 0);
  const auto r = run({"scan", "families", "--n-max", "20"});
  ASSERT_EQ(r.code, 0);
  EXPECT_TRUE(r.data()["verified"].get<bool>());
  EXPECT_EQ(run({"scan", "families", "--n-max", "41"}).code, 5);
  EXPECT_EQ(run({"scan"}).code, 2);
}

TEST_F(CliFiles, Products) {
  const auto p2 = write("p2.g6", "A_\n");
  const auto cart = run({"product", "--op", "cartesian", "--a", p2, "--b", p2});
  ASSERT_EQ(cart.code, 0) << cart.err;
  auto j = cart.data();
  EXPECT_EQ(j["predicted_bh"].get<double>(), 2.25);
  EXPECT_EQ(j["direct_bh"].get<double>(), 2.25);
  EXPECT_TRUE(j["agree"].get<bool>());
  EXPECT_TRUE(bhix::is_connected(bhix::parse_graph6(j["graph6"].get<std::string>())));

  const auto p4 = write("p4.g6", bhix::to_graph6(test::path(4)));
  j = run({"product", "--op", "complement", "--a", p4}).data();
  EXPECT_NEAR(j["direct_bh"].get<double>(), 13.0, 1e-9);
  EXPECT_TRUE(j["agree"].get<bool>());

  const auto star = write("star4.g6", bhix::to_graph6(test::star(4)));
  const auto bad = run({"product", "--op", "complement", "--a", star});
  EXPECT_EQ(bad.code, 3);
  EXPECT_TRUE(bad.out.empty());

  const auto k1 = write("k1.txt", "1 0\n");
  const auto e3 = write("e3.txt", "3 0\n");
  j = run({"product", "--op", "join", "--a", k1, "--b", e3}).data();
  EXPECT_EQ(j["direct_bh"].get<double>(), 8.25);
  j = run({"product", "--op", "lex", "--a", p2, "--b", p2}).data();
  EXPECT_EQ(j["predicted_bh"].get<double>(), 0.75);
  EXPECT_EQ(run({"product", "--op", "join", "--a", p2}).code, 2);
  EXPECT_EQ(run({"product", "--op", "tensor", "--a", p2, "--b", p2}).code, 2);
}

TEST_F(CliFiles, ToleranceOverride) {
  const auto p2 = write("p2.g6", "A_\n");
  ::setenv("BHIX_TOLERANCE", "1e-3", 1);
  EXPECT_EQ(run({"product", "--op", "cartesian", "--a", p2, "--b", p2}).code, 0);
  ::setenv("BHIX_TOLERANCE", "abc", 1);
  EXPECT_EQ(run({"product", "--op", "cartesian", "--a", p2, "--b", p2}).code, 2);
  ::unsetenv("BHIX_TOLERANCE");
}
