#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "bhsp/cli.hpp"
#include "bhsp/fourier.hpp"

using bhsp::cli::run;
using Json = nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data_file(const std::string& name) { return std::string(BHSP_DATA_DIR) + "/" + name; }

}  // namespace

TEST(Cli, AnalyzeBent) {
  const auto r = invoke({"analyze", "ip:4"});
  ASSERT_EQ(r.code, 0) << r.out;
  const auto j = Json::parse(r.out);
  EXPECT_EQ(j["schema"], 1);
  EXPECT_EQ(j["bent"], true);
  EXPECT_EQ(j["p_success"]["1"], 1.0);
  EXPECT_EQ(j["p_success"].size(), 4u);
  EXPECT_EQ(j["minimal_full_support_t"], 1);
  EXPECT_EQ(j["p_success_1_exact"], "1/1");
}

TEST(Cli, DtreeGolden) {
  const auto r = invoke({"dtree", data_file("f10.tree")});
  ASSERT_EQ(r.code, 0) << r.out;
  const auto j = Json::parse(r.out);
  EXPECT_EQ(j["height"], 5);
  EXPECT_EQ(j["zero_coefficients"], 928);
  EXPECT_EQ(j["support_fraction"][0], 0.09375);
  EXPECT_EQ(j["minimal_full_support_t"], 4);
}

TEST(Cli, PgmDelta) {
  const auto r = invoke({"pgm", "--function", "delta:3:0", "--t", "1"});
  ASSERT_EQ(r.code, 0) << r.out;
  EXPECT_EQ(Json::parse(r.out)["p_success"], 0.78125);
}

TEST(Cli, PgmSamplingReproducible) {
  const std::vector<std::string> args{"pgm", "--function", "random:4:3", "--t", "2", "--shift", "0x5",
                                      "--shots", "500", "--seed", "9"};
  const auto a = invoke(args);
  const auto b = invoke(args);
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(Json::parse(a.out)["histogram"]["shots"], 500);
}

TEST(Cli, SupportCsv) {
  const auto r = invoke({"support", "tree:" + data_file("f10.tree")});
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("t,support_size,fraction\n1,96,0.09375\n"), std::string::npos);
  EXPECT_NE(r.out.find("minimal_full_support_t=4"), std::string::npos);
}

TEST(Cli, AnalyzeCsvSpectrum) {
  const auto r = invoke({"analyze", "tt:2:0001", "--csv"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "w,value\n0x0,2/2^2\n0x1,2/2^2\n0x2,2/2^2\n0x3,-2/2^2\n");
}

TEST(Cli, ShiftsAndBounds) {
  auto r = invoke({"shifts", "tt:2:0101"});
  ASSERT_EQ(r.code, 0);
  auto j = Json::parse(r.out);
  EXPECT_EQ(j["undetectable_basis"], Json::array({"0x2"}));
  EXPECT_EQ(j["anti_shift"], "0x1");
  r = invoke({"bounds", "--n", "10", "--weight", "4"});
  ASSERT_EQ(r.code, 0);
  EXPECT_DOUBLE_EQ(Json::parse(r.out)["lower_leading"].get<double>(), 16.0);
}

TEST(Cli, RandstatSmall) {
  const auto r = invoke({"randstat", "--n", "3", "--t", "2", "--samples", "50", "--seed", "4"});
  ASSERT_EQ(r.code, 0) << r.out;
  const auto j = Json::parse(r.out);
  EXPECT_EQ(j["moments"]["variance"], j["moments"]["closed_form_variance"]);
  EXPECT_EQ(j["moments"]["mean"], "1/8");
}

TEST(Cli, TruthTableFile) {
  const std::string path = testing::TempDir() + "cli_f.tt";
  std::ofstream(path) << "n=2\n0110\n";
  const auto r = invoke({"shifts", "@" + path});
  ASSERT_EQ(r.code, 0) << r.out;
  EXPECT_EQ(Json::parse(r.out)["undetectable_basis"], Json::array({"0x3"}));
}

TEST(Cli, Selftest) {
  const auto r = invoke({"selftest"});
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_EQ(Json::parse(r.out)["passed"], true);
}

TEST(Cli, Errors) {
  EXPECT_EQ(invoke({}).code, 2);
  EXPECT_EQ(invoke({"frobnicate"}).code, 2);
  EXPECT_EQ(invoke({"analyze", "ip:4", "--bogus"}).code, 2);
  const auto r = invoke({"analyze", "ip:3"});
  EXPECT_EQ(r.code, 1);
  EXPECT_TRUE(Json::parse(r.out).contains("error"));
  EXPECT_EQ(invoke({"shifts", "nonsense"}).code, 1);
  EXPECT_EQ(invoke({"dtree", "/nonexistent.tree"}).code, 1);
  EXPECT_EQ(invoke({"--help"}).code, 0);
}
