#include <gtest/gtest.h>

#include <json.hpp>
#include <sstream>

#include "commands.hpp"
#include "support.hpp"

namespace rinfty::cli {
namespace {

struct Invocation {
  int status;
  std::string out;
  std::string err;
};

Invocation run(std::vector<std::string> args) {
  args.insert(args.begin(), "rinfty");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int status = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {status, out.str(), err.str()};
}

std::string fx(const char* name) { return test::fixture(name).string(); }

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({"check-linfty", fx("sl2")}).status, kPass);
  EXPECT_EQ(run({"check-linfty", fx("heisenberg_broken")}).status, kCheckFailed);
  EXPECT_EQ(run({"check-linfty", "/nonexistent.yaml"}).status, kUsage);
  EXPECT_EQ(run({}).status, kUsage);
  EXPECT_EQ(run({"frobnicate", fx("sl2")}).status, kUsage);
  EXPECT_EQ(run({"check-linfty", fx("sl2"), "--max-weight", "0"}).status, kUsage);
}

TEST(Cli, MissingRMatrixIsUsage) {
  const Invocation r = run({"transfer", fx("so3")});
  EXPECT_EQ(r.status, kUsage);
  EXPECT_FALSE(r.err.empty());
  CommandOptions o;
  o.command = "check-rmatrix";
  o.fixture = test::fixture("so3");
  EXPECT_THROW(run_command(o), UsageError);
}

TEST(Cli, AbelianHasNoWitnesses) {
  const Invocation r = run({"check-linfty", fx("abelian1")});
  EXPECT_EQ(r.status, kPass);
  EXPECT_EQ(r.out.find("witness:"), std::string::npos);
  EXPECT_NE(r.out.find("status=pass"), std::string::npos);
}

TEST(Cli, TransferReportsCobracket) {
  const Invocation r = run({"transfer", fx("two_dim")});
  EXPECT_EQ(r.status, kPass);
  EXPECT_NE(r.out.find("lambda^1 (1,2)  x -> (1)x*y"), std::string::npos) << r.out;
}

TEST(Cli, BrokenRMatrixHasFirstOrderWitness) {
  const Invocation r = run({"check-rmatrix", fx("dg_broken")});
  EXPECT_EQ(r.status, kCheckFailed);
  EXPECT_NE(r.out.find("witness: lambda^1"), std::string::npos) << r.out;
}

TEST(Cli, RepeatedRunsAreByteIdentical) {
  for (const char* cmd : {"check-linfty", "transfer", "report"})
    for (const char* format : {"text", "machine"}) {
      const Invocation a = run({cmd, fx("l3"), "--format", format});
      const Invocation b = run({cmd, fx("l3"), "--format", format});
      EXPECT_EQ(a.status, kPass) << cmd;
      EXPECT_EQ(a.out, b.out) << cmd << " " << format;
    }
}

TEST(Cli, MachineFormatIsJson) {
  const Invocation r = run({"report", fx("dg"), "--format", "machine", "--max-weight", "3"});
  ASSERT_EQ(r.status, kPass);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["command"], "report");
  EXPECT_EQ(j["policy"]["maxWeight"], 3);
  EXPECT_EQ(j["summary"]["status"], "pass");
  EXPECT_FALSE(j["mu"].empty());
  for (const auto& c : j["checks"]) EXPECT_EQ(c["status"], "pass") << c["check"];
}

TEST(Cli, FlagsOverrideFilePolicy) {
  CommandOptions o;
  o.command = "check-linfty";
  o.fixture = test::fixture("l3");
  o.max_arity = 2;
  const CommandResult r = run_command(o);
  EXPECT_NE(r.report.find("A=2"), std::string::npos);
}

}  // namespace
}  // namespace rinfty::cli
