#include <gtest/gtest.h>

#include <filesystem>
#include <json.hpp>
#include <sstream>

#include "fsys/catalog.hpp"
#include "fsys/cli.hpp"

using namespace fsys;

namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run(std::vector<std::string> args) {
  std::vector<const char*> argv = {"fsys"};
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

nlohmann::json json_of(const CliRun& r) { return nlohmann::json::parse(r.out); }

std::string temp(const std::string& name) { return (std::filesystem::temp_directory_path() / name).string(); }

}  // namespace

TEST(Cli, VerifyCatalogEntries) {
  for (const auto& n : catalog_names(true)) {
    const CliRun r = run({"verify", "catalog:" + n});
    EXPECT_EQ(r.code, 0) << n << "\n" << r.out << r.err;
  }
}

TEST(Cli, VerifyJsonShape) {
  const auto j = json_of(run({"--json", "verify", "catalog:fibonacci-modular"}));
  EXPECT_EQ(j["command"], "verify");
  EXPECT_EQ(j["format_version"], 1);
  EXPECT_EQ(j["report"]["outcome"], "pass");
  EXPECT_EQ(j["report"]["subject"], "modular");
  bool saw_pentagon = false;
  for (const auto& c : j["report"]["checks"]) saw_pentagon = saw_pentagon || c["name"] == "pentagon";
  EXPECT_TRUE(saw_pentagon);
}

TEST(Cli, FusionOnlySubject) {
  const auto j = json_of(run({"--json", "verify", "catalog:fibonacci"}));
  EXPECT_EQ(j["report"]["subject"], "fusion-only");
  EXPECT_FALSE(j["report"]["notes"].empty());
}

TEST(Cli, VerifyFailureExitsOne) {
  SystemFile f = catalog("fibonacci");
  f.system.base.F.at(Quad{1, 1, 1, 1})(0, 0) += CycNumber::one(f.system.field());
  const std::string path = temp("fsys_cli_bad.fsys");
  save_system(f, path);
  const CliRun r = run({"--json", "verify", path});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(json_of(r)["report"]["outcome"], "fail");
  std::filesystem::remove(path);
}

TEST(Cli, EquivVerdicts) {
  EXPECT_EQ(run({"equiv", "catalog:fibonacci", "catalog:yang-lee"}).code, 1);
  EXPECT_EQ(run({"equiv", "catalog:su2-level2", "catalog:ising"}).code, 1);
  EXPECT_EQ(run({"equiv", "catalog:ising", "catalog:ising"}).code, 0);
  const auto j = json_of(run({"--json", "equiv", "catalog:fibonacci", "catalog:yang-lee"}));
  EXPECT_EQ(j["verdict"], "inequivalent");
  EXPECT_TRUE(j.contains("witness"));
  // Different rings are a usage error.
  EXPECT_EQ(run({"equiv", "catalog:fibonacci", "catalog:ising"}).code, 2);
}

TEST(Cli, EquivModularIsPartial) {
  const CliRun r = run({"--json", "equiv", "catalog:toric-code", "catalog:toric-code"});
  EXPECT_EQ(r.code, 0);
  const auto j = json_of(r);
  EXPECT_EQ(j["level"], "modular");
  EXPECT_EQ(j["braiding"], "indistinguishable by implemented invariants");
}

TEST(Cli, TauTwistMatchesIsing) {
  const std::string path = temp("fsys_cli_tau.fsys");
  const CliRun t = run({"twist", "catalog:su2-level2", "--tau", "-1", "--out", path});
  ASSERT_EQ(t.code, 0) << t.err;
  EXPECT_EQ(run({"equiv", path, "catalog:ising"}).code, 0);
  const CliRun inline_grading = run({"twist", "catalog:su2-level2", "--tau", "-1", "--grading", "2:0,1,0"});
  EXPECT_EQ(inline_grading.code, 0);
  EXPECT_EQ(parse_system(inline_grading.out).fusion(), load_system(path).fusion());
  std::filesystem::remove(path);
}

TEST(Cli, SigmaTwistToStdout) {
  const CliRun r = run({"twist", "catalog:fibonacci", "--sigma", "2"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(parse_system(r.out).fusion(), catalog("yang-lee").fusion());
  EXPECT_EQ(run({"twist", "catalog:fibonacci", "--sigma", "5"}).code, 2);
  EXPECT_EQ(run({"twist", "catalog:fibonacci"}).code, 2);
}

TEST(Cli, TwistNeedsGrading) {
  EXPECT_EQ(run({"twist", "catalog:fibonacci", "--tau", "-1"}).code, 2);
  EXPECT_EQ(run({"twist", "catalog:su2-level2", "--tau", "-1", "--grading", "2:0,1,1"}).code, 2);
}

TEST(Cli, Orbit) {
  const auto j = json_of(run({"--json", "orbit", "catalog:fibonacci-modular"}));
  EXPECT_EQ(j["cyclotomic_order"], 20);
  EXPECT_EQ(j["twists"], 8);
  EXPECT_EQ(j["classes"], 4);
  EXPECT_EQ(j["representatives"], nlohmann::json::array({1, 3, 7, 9}));
  EXPECT_EQ(json_of(run({"--json", "orbit", "catalog:fibonacci"}))["classes"], 2);
}

TEST(Cli, Intrinsic) {
  const auto j = json_of(run({"--json", "intrinsic", "catalog:toric-code"}));
  ASSERT_TRUE(j.contains("S_hat"));
  EXPECT_TRUE(j.contains("S"));
  EXPECT_FALSE(j["rational"].empty());
  const CliRun plain = run({"intrinsic", "catalog:fibonacci"});
  EXPECT_EQ(plain.code, 0);
  EXPECT_FALSE(plain.out.empty());
}

TEST(Cli, ApproxAddsRenderings) {
  const std::string exact = run({"--json", "intrinsic", "catalog:fibonacci-modular"}).out;
  const std::string approx = run({"--json", "--approx", "intrinsic", "catalog:fibonacci-modular"}).out;
  EXPECT_EQ(exact.find("approx"), std::string::npos);
  EXPECT_NE(approx.find("approx"), std::string::npos);
}

TEST(Cli, CatalogCommands) {
  const auto names = json_of(run({"--json", "catalog", "list", "--all"}))["names"];
  EXPECT_EQ(names.size(), 10u);
  EXPECT_EQ(run({"catalog", "list"}).code, 0);
  EXPECT_EQ(parse_system(run({"catalog", "show", "ising"}).out), catalog("ising"));
  EXPECT_EQ(run({"catalog", "show", "nope"}).code, 2);
}

TEST(Cli, ExportThenVerify) {
  const std::string path = temp("fsys_cli_export.fsys");
  ASSERT_EQ(run({"catalog", "export", "z2-semion-modular", path}).code, 0);
  EXPECT_EQ(load_system(path), catalog("z2-semion-modular"));
  EXPECT_EQ(run({"verify", path}).code, 0);
  std::filesystem::remove(path);
}

TEST(Cli, UsageAndIoErrors) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"verify", "/nonexistent/file.fsys"}).code, 2);
  EXPECT_EQ(run({"verify", "catalog:nope"}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, NotApplicableExitsThree) {
  const auto r = make_ring({"1", "x"}, "1", {{"1", "1", "1", 1}, {"1", "x", "x", 1}, {"x", "1", "x", 1},
                                             {"x", "x", "1", 1}, {"x", "x", "x", 2}});
  SystemFile f;
  f.name = "multiplicity-two";
  f.system.base = FusionSystem::trivial(r, CycField::get(1));
  const std::string path = temp("fsys_cli_mult.fsys");
  save_system(f, path);
  EXPECT_EQ(run({"equiv", path, path}).code, 3);
  std::filesystem::remove(path);
}

TEST(Cli, JsonIsDeterministic) {
  for (const std::vector<std::string>& args :
       {std::vector<std::string>{"--json", "verify", "catalog:ising"},
        {"--json", "equiv", "catalog:su2-level2", "catalog:ising"},
        {"--json", "orbit", "catalog:toric-code"},
        {"--json", "intrinsic", "catalog:z2-semion-modular"}}) {
    EXPECT_EQ(run(args).out, run(args).out);
  }
}
