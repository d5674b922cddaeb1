#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

#include "dopfactor/cli/commands.hpp"
#include "support/generators.hpp"

using namespace dopfactor;
using namespace dopfactor::cli;

namespace {

const Op D = Op::d();
const Op X = Op(Poly::x());

struct RunResult {
  int code = -1;
  std::string out;
};

// Runs the command-line tool; stderr is folded into out.
RunResult run_cli(const std::string& args) {
  const std::string cmd = std::string(DOPFACTOR_CLI) + " " + args + " 2>&1";
  RunResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf;
  while (std::fgets(buf.data(), buf.size(), pipe)) r.out += buf.data();
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

Json without_timing(Json j) {
  j.erase("timing_ms");
  return j;
}

}  // namespace

TEST(Parser, Examples) {
  EXPECT_EQ(parse_operator("D*x"), X * D + Op(1));
  EXPECT_EQ(parse_operator("D^2 - x^2 + 1"), D * D - X * X + Op(1));
  EXPECT_EQ(parse_operator("(D - x)*(D + x)"), D * D - X * X + Op(1));
  EXPECT_EQ(parse_operator("-D"), -D);
  EXPECT_EQ(parse_operator("2/3*x"), Op(Poly::monomial(Scalar(make_rational(2, 3)), 1)));
  EXPECT_EQ(parse_operator("  D ^ 2-x "), D * D - X);
  EXPECT_EQ(parse_operator("(x + 1)^3"), Op(pow(Poly::x() + Poly(Scalar(1)), 3)));
}

TEST(Parser, ParametersAndRoots) {
  ParseContext ctx;
  ctx.params["a"] = Scalar(4);
  ctx.params["b"] = Scalar(3);
  EXPECT_EQ(parse_operator("D^2 - a*x^4 - b*x^3", ctx), parse_operator("D^2 - 4*x^4 - 3*x^3"));

  ParseContext field;
  field.field_base = 2;
  EXPECT_EQ(parse_operator("sqrt(2)*x", field), Op(Poly::monomial(Scalar::theta(2), 1)));
  EXPECT_EQ(parse_operator("sqrt(8)", field), Op(Scalar(Rational(0), Rational(2), Rational(2))));
  EXPECT_EQ(parse_operator("sqrt(9/4)"), Op(Scalar(make_rational(3, 2))));
  EXPECT_THROW(parse_operator("sqrt(2)"), FieldExtensionRequired);
}

TEST(Parser, ErrorsCarryPositions) {
  try {
    parse_operator("D^2 - y");
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position, 6u);
  }
  EXPECT_THROW(parse_operator("x^-1"), ParseError);
  EXPECT_THROW(parse_operator("D^"), ParseError);
  EXPECT_THROW(parse_operator("(D + x"), ParseError);
  EXPECT_THROW(parse_operator("D + + "), ParseError);
  EXPECT_THROW(parse_operator("1/0"), ParseError);
  EXPECT_THROW(parse_operator(""), ParseError);
  EXPECT_THROW(parse_polynomial("D + x"), ParseError);
}

TEST(Render, Examples) {
  EXPECT_EQ(render(D * D - X), "D^2 - x");
  EXPECT_EQ(render(X * D + Op(1)), "x*D + 1");
  EXPECT_EQ(render(Op()), "0");
  EXPECT_EQ(render(Op(Poly::monomial(Scalar(make_rational(-1, 2)), 2)) * D), "-1/2*x^2*D");
  EXPECT_EQ(render(fourier(D * D - X)), "-D + x^2");
  EXPECT_EQ(render(Scalar(Rational(1), Rational(-3), Rational(2))), "(1 - 3*sqrt(2))");
}

TEST(Render, RoundTripsThroughTheParser) {
  prop::Gen g(61);
  for (int t = 0; t < 300; ++t) {
    const Op op = g.op(3, 3);
    ASSERT_EQ(parse_operator(render(op)), op) << render(op);
  }
  ParseContext field;
  field.field_base = 2;
  for (int t = 0; t < 200; ++t) {
    const Op op = g.op(2, 3, Rational(2));
    ASSERT_EQ(parse_operator(render(op), field), op) << render(op);
  }
}

TEST(Commands, AnalyzeVerdicts) {
  auto doc = cmd_analyze({"D^2 - x^2 + 1", std::nullopt, 64, {}});
  EXPECT_EQ(doc.exit_code, kSuccess);
  EXPECT_EQ(doc.payload["result"]["verdict"], "reducible");
  EXPECT_NE(doc.text.find("REDUCIBLE (right factor: D + x)"), std::string::npos);

  doc = cmd_analyze({"D^2 - x", std::nullopt, 64, {}});
  EXPECT_EQ(doc.payload["result"]["verdict"], "irreducible");
  EXPECT_NE(doc.text.find("IRREDUCIBLE over Q(x)"), std::string::npos);

  // a square base is just Q
  doc = cmd_analyze({"D^2 - x^4 - 2*x^3", Rational(1), 64, {}});
  EXPECT_NE(doc.text.find("IRREDUCIBLE over Q(x)"), std::string::npos);
  doc = cmd_analyze({"D^2 - 2*x^2 + sqrt(2)", Rational(2), 64, {}});
  EXPECT_NE(doc.text.find("REDUCIBLE (right factor: D + sqrt(2)*x)"), std::string::npos) << doc.text;
}

TEST(Commands, ExitCodes) {
  EXPECT_EQ(cmd_analyze({"D^2 - y", std::nullopt, 64, {}}).exit_code, kUsageError);
  EXPECT_EQ(cmd_analyze({"D^3 - x", std::nullopt, 64, {}}).exit_code, kUsageError);
  EXPECT_EQ(cmd_analyze({"D^2 - x^2 - 21", std::nullopt, 5, {}}).exit_code, kUsageError);
  EXPECT_EQ(cmd_analyze({"D^2 - 2*x^2", Rational(3), 64, {}}).exit_code, kUnsupportedField);
  EXPECT_EQ(cmd_nabla({"verify", 1}).exit_code, kUsageError);
  EXPECT_EQ(cmd_nabla({"h", 4}).exit_code, kUsageError);
  EXPECT_EQ(cmd_nabla({"verify", 7}).exit_code, kSuccess);
  EXPECT_EQ(cmd_transform({"fourier", "D^2 - x", "0", "0", std::nullopt}).exit_code, kSuccess);
}

TEST(Commands, JsonIsDeterministic) {
  const AnalyzeArgs args{"D^2 - x^2 - 3", std::nullopt, 64, {}};
  const Json a = cmd_analyze(args).to_json(), b = cmd_analyze(args).to_json();
  EXPECT_EQ(without_timing(a).dump(), without_timing(b).dump());
  std::vector<std::string> keys;
  for (auto it = a.begin(); it != a.end(); ++it) keys.push_back(it.key());
  EXPECT_EQ(keys, (std::vector<std::string>{"schema_version", "command", "input", "result", "trace", "timing_ms"}));
  EXPECT_EQ(a["schema_version"], kSchemaVersion);
}

TEST(Commands, NablaMu) {
  const auto doc = cmd_nabla({"mu", 1});
  EXPECT_EQ(doc.exit_code, kSuccess);
  EXPECT_NE(doc.text.find("96"), std::string::npos);
}

TEST(EndToEnd, AnalyzeAndTransforms) {
  auto r = run_cli("analyze 'D^2 - x^2 + 1'");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("REDUCIBLE (right factor: D + x)"), std::string::npos) << r.out;

  r = run_cli("adjoint 'x*D'");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "-x*D - 1\n");

  r = run_cli("translate 'x*D' --c 2");
  EXPECT_EQ(r.out, "x*D + 2*D\n");

  r = run_cli("twist 'D^2 - x^2' --r x");
  EXPECT_EQ(r.out, "D^2 + 2*x*D + 1\n");

  r = run_cli("analyze 'D^2 - 4*x^4 - 3*x^3' --json");
  EXPECT_EQ(r.code, 0);
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j["result"]["verdict"], "irreducible");
}

TEST(EndToEnd, ExitCodes) {
  EXPECT_EQ(run_cli("analyze 'D^2 - x^-1'").code, 2);
  EXPECT_EQ(run_cli("analyze").code, 2);
  EXPECT_EQ(run_cli("bogus").code, 2);
  EXPECT_EQ(run_cli("analyze 'D^2 - 2*x^2' --field-sqrt 3").code, 3);
  EXPECT_EQ(run_cli("analyze 'D^2 - x^3 - sqrt(2)'").code, 3);
  EXPECT_EQ(run_cli("nabla verify --d 12").code, 0);
  EXPECT_EQ(run_cli("nabla sweep --max-d 20").code, 0);
  EXPECT_EQ(run_cli("analyze 'D^2 - a*x^4 - b*x^3' --param a=1 --param b=2 --field-sqrt 1").code, 0);
}
