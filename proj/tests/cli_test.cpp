#include "support.hpp"

#include "cli.hpp"
#include "symprove/certificate.hpp"
#include "symprove/io.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <sstream>

namespace symprove {
namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::dispatch(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return testing::data_path(name); }

class TempDir {
public:
  TempDir() : path_(std::filesystem::temp_directory_path() / "symprove_cli_test") {
    std::filesystem::create_directories(path_);
  }
  ~TempDir() { std::filesystem::remove_all(path_); }
  std::string file(const std::string& name, const std::string& contents = "") const {
    auto p = (path_ / name).string();
    if (!contents.empty()) {
      write_file_atomic(p, contents);
    }
    return p;
  }

private:
  std::filesystem::path path_;
};

TEST(Cli, ProveWritesCertificate) {
  TempDir dir;
  auto path = dir.file("cert.json");
  auto r = run({"prove", "--kind", "det", "--stages", "1", "--cross-check", "--out", path});
  EXPECT_EQ(r.code, cli::exit_ok) << r.err;
  EXPECT_EQ(r.out, "SYMPLECTIC-VERIFIED\n");
  auto cert = parse_certificate(read_file(path));
  EXPECT_EQ(cert.verdict, Verdict::symplectic_verified);
  EXPECT_EQ(cert.stage1->cross_check, "agree");

  auto stdout_run = run({"prove", "--kind", "stoch", "--stages", "1", "--order1", "reversed",
                         "--order2", "lex", "--emit-gg"});
  EXPECT_EQ(stdout_run.code, cli::exit_ok);
  auto c2 = parse_certificate(stdout_run.out);
  EXPECT_EQ(c2.options.order2, OrderKind::lex);
  EXPECT_TRUE(c2.stage1->gg_numerator.has_value());
}

TEST(Cli, NotReducedExitCode) {
  auto r = run({"prove", "--kind", "det", "--stages", "1", "--no-identify-mixed-partials"});
  EXPECT_EQ(r.code, cli::exit_not_reduced);
  EXPECT_NE(r.out.find("NOT-REDUCED"), std::string::npos);
  auto budget = run({"prove", "--kind", "det", "--stages", "2", "--max-pairs", "1"});
  EXPECT_EQ(budget.code, cli::exit_not_reduced);
}

TEST(Cli, GroebnerAndReduce) {
  auto r = run({"groebner", data("demo.ideal")});
  EXPECT_EQ(r.code, cli::exit_ok) << r.err;
  EXPECT_EQ(r.out, "x - y^2\ny^3 - 1\n");
  auto red = run({"reduce", data("demo.ideal"), "--poly", "y^4 - y"});
  EXPECT_EQ(red.code, cli::exit_ok);
  EXPECT_EQ(red.out, "0\n");
  auto rem = run({"reduce", data("demo.ideal"), "--poly", "x + y^5"});
  EXPECT_EQ(rem.out, "2*y^2\n");

  TempDir dir;
  auto param = dir.file("p.ideal", "vars: x\nparams: t\nt*x - 1\n");
  auto pr = run({"reduce", param, "--poly", "x^2"});
  EXPECT_EQ(pr.code, cli::exit_ok) << pr.err;
  EXPECT_EQ(pr.out, "(1)/(t^2)\n");

  auto out = dir.file("basis.txt");
  EXPECT_EQ(run({"groebner", data("demo.ideal"), "--out", out}).code, cli::exit_ok);
  EXPECT_EQ(read_file(out), "x - y^2\ny^3 - 1\n");
}

TEST(Cli, CheckCoeffs) {
  auto ok = run({"check-coeffs", data("lobatto3ab.coeffs"), "--kind", "det", "--stages", "2"});
  EXPECT_EQ(ok.code, cli::exit_ok);
  EXPECT_EQ(ok.out, "all 6 conditions satisfied\n");
  auto sm = run({"check-coeffs", data("stoch_midpoint.coeffs"), "--kind", "stoch", "--stages", "1"});
  EXPECT_EQ(sm.code, cli::exit_ok);
  EXPECT_EQ(sm.out, "all 6 conditions satisfied\n");
  auto bad = run({"check-coeffs", data("euler.coeffs"), "--kind", "det", "--stages", "1"});
  EXPECT_EQ(bad.code, cli::exit_failure);
  EXPECT_NE(bad.out.find("violated: "), std::string::npos);
}

TEST(Cli, NumericCheck) {
  auto ok = run({"numeric-check", "--kind", "det", "--stages", "2", "--coeffs",
                 data("lobatto3ab.coeffs"), "--ham", "pendulum"});
  EXPECT_EQ(ok.code, cli::exit_ok) << ok.err;
  EXPECT_EQ(ok.out.rfind("symplectic residual ", 0), 0u);
  auto euler = run({"numeric-check", "--kind", "det", "--stages", "1", "--coeffs",
                    data("euler.coeffs"), "--ham", "harmonic", "--h", "0.01"});
  EXPECT_EQ(euler.code, cli::exit_failure);
  auto st = run({"numeric-check", "--kind", "stoch", "--stages", "1", "--coeffs",
                 data("stoch_midpoint.coeffs"), "--ham", "harmonic/sinq", "--dB", "-0.1"});
  EXPECT_EQ(st.code, cli::exit_ok) << st.err;
}

TEST(Cli, UsageErrors) {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {},
           {"frobnicate"},
           {"prove"},
           {"prove", "--kind", "det"},
           {"prove", "--kind", "quantum", "--stages", "2"},
           {"prove", "--kind", "det", "--stages", "0"},
           {"prove", "--kind", "det", "--stages", "1", "--order1", "sideways"},
           {"prove", "--kind", "det", "--stages", "1", "--bogus"},
           {"reduce", data("demo.ideal")},
           {"numeric-check", "--kind", "det", "--stages", "1", "--ham", "harmonic"},
       }) {
    auto r = run(args);
    EXPECT_EQ(r.code, cli::exit_usage) << ::testing::PrintToString(args);
    EXPECT_FALSE(r.err.empty());
  }
}

TEST(Cli, FileAndInputErrors) {
  TempDir dir;
  auto missing = dir.file("missing.ideal");
  auto broken = dir.file("broken.ideal", "vars: x\nx +* 1\n");
  auto badcoeffs = dir.file("bad.coeffs", "a11 = 1/2\n");
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"groebner", missing},
           {"groebner", broken},
           {"reduce", data("demo.ideal"), "--poly", "x + w"},
           {"check-coeffs", badcoeffs, "--kind", "det", "--stages", "1"},
           {"check-coeffs", missing, "--kind", "det", "--stages", "1"},
           {"numeric-check", "--kind", "det", "--stages", "1", "--coeffs", data("midpoint.coeffs"),
            "--ham", "quartic"},
           {"numeric-check", "--kind", "det", "--stages", "1", "--coeffs", data("midpoint.coeffs"),
            "--ham", "harmonic", "--dB", "0.1"},
       }) {
    auto r = run(args);
    EXPECT_EQ(r.code, cli::exit_failure) << ::testing::PrintToString(args);
    EXPECT_EQ(r.err.rfind("error: ", 0), 0u) << r.err;
  }
}

TEST(Cli, Help) {
  auto r = run({"--help"});
  EXPECT_EQ(r.code, cli::exit_ok);
  EXPECT_NE(r.out.find("numeric-check"), std::string::npos);
}

} // namespace
} // namespace symprove
