#include <gtest/gtest.h>

#include <nlohmann/json.hpp>
#include <sstream>

#include "cli.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "vogel");
  std::ostringstream out;
  std::ostringstream err;
  int code = vogel::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

bool has_line(const std::string& text, const std::string& line) {
  std::istringstream in(text);
  for (std::string l; std::getline(in, l);) {
    if (l == line) return true;
  }
  return false;
}

}  // namespace

TEST(Cli, DimAdjoint) {
  auto r = run({"dim", "--point", "E8", "--formula", "adjoint"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "248\n");
  r = run({"dim", "--point", "1,1,1", "--formula", "adjoint"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "-125\n");
}

TEST(Cli, DimSingularPointsToResolve) {
  auto r = run({"dim", "--point", "sl:2", "--formula", "y2beta"});
  EXPECT_EQ(r.code, 3);
  EXPECT_NE(r.err.find("singular; try resolve --line sl"), std::string::npos);
}

TEST(Cli, ParseErrors) {
  EXPECT_EQ(run({"dim", "--point", "1,x,1", "--formula", "adjoint"}).code, 2);
  EXPECT_EQ(run({"dim", "--point", "Q8", "--formula", "adjoint"}).code, 2);
  EXPECT_EQ(run({"dim", "--point", "E8", "--formula", "Z", "--perm", "abd"}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
}

TEST(Cli, ResolveGolden) {
  auto so = run({"resolve", "--point", "so:8", "--formula", "y2beta", "--line", "so"});
  EXPECT_EQ(so.code, 0);
  EXPECT_TRUE(has_line(so.out, "classical: 70")) << so.out;
  auto exc = run({"resolve", "--point", "so:8", "--formula", "y2beta", "--line", "exc"});
  EXPECT_TRUE(has_line(exc.out, "classical: 105")) << exc.out;
  auto cso = run({"resolve", "--point", "4,4,-2", "--formula", "cartan", "--line", "so"});
  EXPECT_TRUE(has_line(cso.out, "classical: -35")) << cso.out;
  auto cexc = run({"resolve", "--point", "4,4,-2", "--formula", "cartan", "--line", "exc"});
  EXPECT_TRUE(has_line(cexc.out, "classical: -105")) << cexc.out;
}

TEST(Cli, ResolveQuantum) {
  auto r = run({"resolve", "--point", "sl:2", "--formula", "y2beta", "--line", "sl", "--quantum", "--at", "1.0",
                "--laurent"});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(has_line(r.out, "classical: -3")) << r.out;
  EXPECT_TRUE(has_line(r.out, "laurent: -q^2 - 1 - q^-2")) << r.out;
  EXPECT_NE(r.out.find("quantum at x=1: -4.0861612696"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("residual: -sinh(6x/4)/sinh(2x/4)"), std::string::npos) << r.out;
}

TEST(Cli, ResolveJsonAgreesWithText) {
  auto r = run({"resolve", "--point", "so:8", "--formula", "y2beta", "--line", "exc", "--json"});
  ASSERT_EQ(r.code, 0);
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j.at("classical_value"), "105");
  EXPECT_EQ(j.at("kind"), "LR");
}

TEST(Cli, ResolveErrors) {
  EXPECT_EQ(run({"resolve", "--point", "Y:3", "--formula", "Z", "--k", "4", "--l", "1", "--perm", "bca", "--line",
                 "0,5,-4"})
                .code,
            5);
  EXPECT_EQ(run({"resolve", "--point", "sl:2", "--formula", "y2beta", "--line", "so"}).code, 2);
}

TEST(Cli, ResolveIrregular) {
  // beta-gamma is a vanishing denominator factor at sl:2.
  auto r = run({"resolve", "--point", "sl:2", "--formula", "y2beta", "--line", "0,1,-1"});
  EXPECT_EQ(r.code, 4) << r.out << r.err;
}

TEST(Cli, ClassifyYThree) {
  auto r = run({"classify", "--point", "Y:3", "--formula", "Z", "--k", "4", "--l", "1", "--perm", "bca"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind("NotLR", 0), 0u) << r.out;
  EXPECT_TRUE(has_line(r.out, "witness: 2α-3β")) << r.out;
}

TEST(Cli, ScanPropTwo) {
  auto r = run({"scan", "--prop", "2", "--kmax", "2", "--lmax", "2", "--json"});
  EXPECT_EQ(r.code, 0);
  auto j = nlohmann::json::parse(r.out);
  EXPECT_TRUE(j.at("passed").get<bool>());
  EXPECT_EQ(j.at("counts").at("NotLR"), 0);
  EXPECT_FALSE(j.contains("seconds"));
}

TEST(Cli, ScanFailureExitCode) {
  auto r = run({"scan", "--prop", "3", "--kmax", "1", "--lmax", "1"});
  EXPECT_EQ(r.code, 1);
}

TEST(Cli, ScanNeedsOneMode) {
  EXPECT_EQ(run({"scan"}).code, 2);
}

TEST(Cli, CatalogExport) {
  auto csv = run({"catalog", "export", "--format", "csv"});
  EXPECT_EQ(csv.code, 0);
  EXPECT_EQ(csv.out.rfind("name,alpha,beta,gamma,dim,rank,lines,region\n", 0), 0u);
  EXPECT_NE(csv.out.find("\nE8,-6,-10,1,248,8,"), std::string::npos);
  auto js = run({"catalog", "export", "--format", "json"});
  EXPECT_EQ(nlohmann::json::parse(js.out).size(), 93u);
  auto show = run({"catalog", "show", "Y:32"});
  EXPECT_EQ(nlohmann::json::parse(show.out).at("dim"), "-244");
}

TEST(Cli, Trefoil) {
  auto r = run({"trefoil", "--point", "sl:2", "--q", "1"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "1\n");
}

TEST(Cli, DimQuantumLaurent) {
  auto r = run({"dim", "--point", "sl:2", "--formula", "adjoint", "--quantum", "--laurent"});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(has_line(r.out, "laurent: q^2 + 1 + q^-2")) << r.out;
}
