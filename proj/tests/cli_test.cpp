#include <gtest/gtest.h>

#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"

namespace eqdeg::cli {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string corpus(const std::string& name) { return std::string(EQDEG_CORPUS_DIR) + "/" + name; }

// Writes `text` to a scratch ideal file and returns its path.
std::string scratch(const std::string& name, const std::string& text) {
  auto path = std::filesystem::temp_directory_path() / ("eqdeg_cli_test_" + name);
  std::ofstream(path) << text;
  return path.string();
}

TEST(Cli, DegreeOfCounterexample) {
  auto r = run_cli({"degree", corpus("cex.ideal"), "--dim", "1", "--trials", "5", "--seed", "42", "--json"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["degree"], 2);
  EXPECT_EQ(j["seed"], 42);
  EXPECT_EQ(j["trials"].size(), 5u);
}

TEST(Cli, DegreeOfCutCounterexample) {
  auto r = run_cli({"degree", corpus("cex_plus_x2.ideal"), "--dim", "0", "--json"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(nlohmann::json::parse(r.out)["degree"], 3);
}

TEST(Cli, LexBasisOfLinearSystem) {
  auto r = run_cli({"gb", corpus("linear.ideal"), "--order", "lex"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "{x1 - 1, x2 - 1}\n");
}

TEST(Cli, DegreeReportSchema) {
  auto r = run_cli({"degree", corpus("circle.ideal"), "--json", "--prime", "1048583"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = nlohmann::json::parse(r.out);
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  std::sort(keys.begin(), keys.end());
  EXPECT_EQ(keys, (std::vector<std::string>{"agreement_ratio", "coefficient_bound", "degree", "field", "prime", "seed",
                                            "trials"}));
  EXPECT_TRUE(j["degree"].is_number_integer());
  EXPECT_TRUE(j["seed"].is_number_integer());
  EXPECT_TRUE(j["coefficient_bound"].is_number_integer());
  EXPECT_EQ(j["field"], "Fp");
  EXPECT_EQ(j["prime"], 1048583);
  EXPECT_TRUE(j["agreement_ratio"].is_string());
  for (const auto& t : j["trials"]) {
    ASSERT_TRUE(t["result"] == "count" || t["result"] == "not_zero_dimensional");
    EXPECT_EQ(t["result"] == "count", t["count"].is_number_integer());
    EXPECT_EQ(t["result"] == "not_zero_dimensional", t["count"].is_null());
  }
  auto q = nlohmann::json::parse(run_cli({"degree", corpus("circle.ideal"), "--json"}).out);
  EXPECT_EQ(q["field"], "QQ");
  EXPECT_TRUE(q["prime"].is_null());
}

TEST(Cli, EverySubcommandHasJson) {
  std::vector<std::vector<std::string>> commands = {
      {"gb", corpus("cex.ideal")},
      {"dim", corpus("cex.ideal")},
      {"degree", corpus("cex.ideal")},
      {"quotient", corpus("cex.ideal"), "--by", "x2"},
      {"regular-check", corpus("cex.ideal"), "--seq", "x2"},
      {"secant-check", corpus("cex.ideal"), "--seq", "x2"},
      {"bezout-check", corpus("double_line.ideal"), "--seq", "x2 - 1"},
      {"mw-bound", corpus("cex.ideal"), "--component", "1:2"},
      {"hilbert-degree", corpus("cex.ideal")},
      {"corpus", "--dir", EQDEG_CORPUS_DIR},
  };
  for (auto args : commands) {
    args.push_back("--json");
    auto r = run_cli(args);
    EXPECT_EQ(r.code, 0) << args[0] << ": " << r.err;
    EXPECT_TRUE(nlohmann::json::accept(r.out)) << args[0];
    EXPECT_EQ(r.out, run_cli(args).out) << args[0];
  }
}

TEST(Cli, SameArgumentsSameBytes) {
  std::vector<std::string> args = {"degree", corpus("twisted_cubic.ideal"), "--seed", "7", "--trials", "9"};
  auto first = run_cli(args);
  ASSERT_EQ(first.code, 0);
  for (int i = 0; i < 3; ++i) EXPECT_EQ(run_cli(args).out, first.out);
  args[3] = "8";
  EXPECT_NE(run_cli(args).out, first.out);  // the seed is echoed
}

TEST(Cli, RefusalsExitOne) {
  auto bezout = run_cli({"bezout-check", corpus("cex.ideal"), "--seq", "x2"});
  EXPECT_EQ(bezout.code, 1);
  EXPECT_NE(bezout.err.find("zero divisor"), std::string::npos);
  EXPECT_TRUE(bezout.out.empty());
  EXPECT_EQ(run_cli({"degree", corpus("cex.ideal"), "--dim", "0"}).code, 1);
  EXPECT_EQ(run_cli({"secant-check", corpus("cex.ideal"), "--dim", "2", "--seq", "x2"}).code, 1);
}

TEST(Cli, SequenceFailuresAreReportsNotRefusals) {
  auto r = run_cli({"regular-check", corpus("cex.ideal"), "--seq", "x2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "regular: fails at 1 (zero divisor)\n");
  auto s = run_cli({"secant-check", corpus("cex.ideal"), "--seq", "x1"});
  EXPECT_EQ(s.out, "secant: fails at 1 (dimension 1)\n");
}

TEST(Cli, InputErrorsExitTwo) {
  EXPECT_EQ(run_cli({}).code, 2);
  EXPECT_EQ(run_cli({"bogus"}).code, 2);
  EXPECT_EQ(run_cli({"gb", corpus("cex.ideal"), "--frobnicate"}).code, 2);
  EXPECT_EQ(run_cli({"gb", corpus("cex.ideal"), "--order", "revlex"}).code, 2);
  EXPECT_EQ(run_cli({"gb", "/nonexistent/file.ideal"}).code, 2);
  EXPECT_EQ(run_cli({"degree", corpus("linear.ideal")}).code, 2);  // no dimension anywhere
  EXPECT_EQ(run_cli({"gb", corpus("cex.ideal"), "--prime", "15"}).code, 2);
  EXPECT_EQ(run_cli({"bezout-check", corpus("double_line.ideal"), "--seq", "x2 - 1", "--prime", "1048583"}).code, 2);
  EXPECT_EQ(run_cli({"mw-bound", corpus("cex.ideal"), "--component", "1-2"}).code, 2);
  EXPECT_EQ(run_cli({"quotient", corpus("cex.ideal"), "--by", "x3"}).code, 2);
  EXPECT_EQ(run_cli({"corpus", "--dir", "/nonexistent"}).code, 2);

  auto bad = run_cli({"gb", scratch("bad.ideal", "vars: x, y\nx + \n")});
  EXPECT_EQ(bad.code, 2);
  EXPECT_NE(bad.err.find("line 2"), std::string::npos) << bad.err;
  EXPECT_EQ(run_cli({"gb", scratch("novars.ideal", "x + 1\n")}).code, 2);
  EXPECT_EQ(run_cli({"gb", scratch("unknown.ideal", "vars: x\ny\n")}).code, 2);
  EXPECT_EQ(run_cli({"gb", scratch("dup.ideal", "vars: x, x\nx\n")}).code, 2);
}

TEST(Cli, HelpExitsZero) {
  auto r = run_cli({"--help"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("bezout-check"), std::string::npos);
}

TEST(Cli, FileFormatComments) {
  auto path = scratch("comments.ideal", "# leading comment\nvars: a, b\ndim: 0\n# between\na^2 - 1  # trailing\n\nb - a\n");
  auto r = run_cli({"degree", path});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out.substr(0, 9), "degree 2\n");
  EXPECT_EQ(run_cli({"gb", path}).out, "{b^2 - 1, a - b}\n");
}

TEST(Cli, HumanOutputs) {
  EXPECT_EQ(run_cli({"dim", corpus("four_points.ideal")}).out, "dimension 0\nstandard monomials 4\n");
  EXPECT_EQ(run_cli({"hilbert-degree", corpus("cex.ideal")}).out, "dimension 1\ndegree 2\nnumerator 1 0 0 -2 1\n");
  EXPECT_EQ(run_cli({"bezout-check", corpus("double_line.ideal"), "--seq", "x2 - 1"}).out, "lhs 2 <= rhs 2: holds\n");
  EXPECT_EQ(run_cli({"mw-bound", corpus("cex.ideal"), "--component", "1:2"}).out,
            "height 1: degree 2 <= 3\ntotal 2 <= 3\nholds\n");
  EXPECT_EQ(run_cli({"quotient", corpus("cex.ideal"), "--by", "x2"}).out, "{x1^2}\n");
}

TEST(Cli, CorpusPassesInBothFields) {
  auto q = run_cli({"corpus", "--dir", EQDEG_CORPUS_DIR});
  EXPECT_EQ(q.code, 0) << q.err;
  EXPECT_NE(q.out.find("17/17 entries pass"), std::string::npos) << q.out;
  auto p = run_cli({"corpus", "--dir", EQDEG_CORPUS_DIR, "--prime", "2305843009213693951"});
  EXPECT_EQ(p.code, 0) << p.err;
}

TEST(Cli, CorpusReportsWrongAnnotations) {
  auto dir = std::filesystem::temp_directory_path() / "eqdeg_cli_test_corpus";
  std::filesystem::create_directories(dir);
  std::filesystem::copy_file(corpus("cex.ideal"), dir / "cex.ideal", std::filesystem::copy_options::overwrite_existing);
  std::ofstream(dir / "manifest.json") << R"({"entries":[{"name":"cex","file":"cex.ideal","dim":1,"degree":3,)"
                                       << R"("equidimensional":true,"components":[{"height":1,"degree":3}]}]})";
  auto r = run_cli({"corpus", "--dir", dir.string()});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("degree 2, expected 3"), std::string::npos) << r.err;
}

}  // namespace
}  // namespace eqdeg::cli
