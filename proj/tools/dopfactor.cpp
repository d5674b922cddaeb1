#include <exception>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "dopfactor/cli/commands.hpp"

namespace {

using namespace dopfactor;
using namespace dopfactor::cli;

Rational parse_rational_arg(const std::string& s) {
  ParseContext ctx;
  Poly p = parse_polynomial(s, ctx);
  if (p.degree() > Degree(0) || !p.coeff(0).is_rational()) throw ParseError("expected a rational number: " + s, 0);
  return p.coeff(0).rational_part();
}

int emit(const ReportDocument& doc, bool json) {
  if (json) {
    std::cout << doc.to_json().dump(2) << "\n";
  } else if (doc.exit_code == kUsageError || doc.exit_code == kUnsupportedField) {
    std::cerr << doc.text;
  } else {
    std::cout << doc.text;
  }
  return doc.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact factorization of D^2 - Q(x) and verification of the banded determinant nabla(d, alpha)"};
  app.require_subcommand(1);
  bool json = false;

  // analyze
  std::string op;
  std::string field_sqrt_str;
  std::size_t max_degree = 64;
  std::vector<std::string> param_strs;
  auto* analyze = app.add_subcommand("analyze", "decide whether D^2 - Q has an order-1 factor");
  analyze->add_option("operator", op, "operator, e.g. \"D^2 - x^2 + 1\"")->required();
  analyze->add_option("--field-sqrt", field_sqrt_str, "work over Q(sqrt(A))(x)");
  analyze->add_option("--max-degree", max_degree, "largest polynomial-solution degree searched")
      ->capture_default_str();
  analyze->add_option("--param", param_strs, "bind a parameter, e.g. a=4 (repeatable)");
  analyze->add_flag("--json", json, "emit a JSON report");

  // nabla
  std::size_t d = 0;
  auto* nabla_cmd = app.add_subcommand("nabla", "exact checks on the determinant nabla(d, alpha)");
  nabla_cmd->require_subcommand(1);
  std::map<std::string, CLI::App*> nabla_subs;
  for (const char* sub : {"mu", "verify", "h"}) {
    auto* s = nabla_cmd->add_subcommand(sub);
    s->add_option("--d", d, "matrix parameter d")->required();
    s->add_flag("--json", json, "emit a JSON report");
    nabla_subs[sub] = s;
  }
  nabla_subs["mu"]->description("print mu(d), where nabla(d, alpha) = mu(d) alpha^(2(d+1))");
  nabla_subs["verify"]->description("check recurrence, nonvanishing, parity and inequalities for one d");
  nabla_subs["h"]->description("evaluate h at (d-1)/2, (d+1)/2, (d+3)/2 for odd d");
  auto* sweep = nabla_cmd->add_subcommand("sweep", "verify every d up to --max-d");
  sweep->add_option("--max-d", d, "largest d")->required();
  sweep->add_flag("--json", json, "emit a JSON report");
  nabla_subs["sweep"] = sweep;

  // transforms
  std::string shift = "0", twist_r = "0";
  std::map<std::string, CLI::App*> transforms;
  for (const char* kind : {"fourier", "adjoint", "translate", "twist"}) {
    auto* t = app.add_subcommand(kind);
    t->add_option("operator", op, "operator expression")->required();
    t->add_option("--field-sqrt", field_sqrt_str, "allow sqrt(A) literals");
    t->add_flag("--json", json, "emit a JSON report");
    transforms[kind] = t;
  }
  transforms["fourier"]->description("Fourier transform x -> D, D -> -x");
  transforms["adjoint"]->description("adjoint sum (-D)^i o a_i");
  transforms["translate"]->description("change of variable x -> x + c");
  transforms["translate"]->add_option("--c", shift, "shift c")->required();
  transforms["twist"]->description("substitute D -> D + r");
  transforms["twist"]->add_option("--r", twist_r, "polynomial r(x)")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsageError;
  }

  try {
    std::optional<Rational> field;
    if (!field_sqrt_str.empty()) field = parse_rational_arg(field_sqrt_str);

    if (analyze->parsed()) {
      AnalyzeArgs args{op, field, max_degree, {}};
      for (const auto& p : param_strs) {
        const auto eq = p.find('=');
        if (eq == std::string::npos || eq == 0) throw ParseError("--param expects name=value, got " + p, 0);
        args.params[p.substr(0, eq)] = parse_rational_arg(p.substr(eq + 1));
      }
      return emit(cmd_analyze(args), json);
    }
    if (nabla_cmd->parsed()) {
      for (const auto& [name, sub] : nabla_subs)
        if (sub->parsed()) return emit(cmd_nabla({name, d}), json);
    }
    for (const auto& [kind, t] : transforms)
      if (t->parsed()) return emit(cmd_transform({kind, op, shift, twist_r, field}), json);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kVerificationFailure;
  }
  return kUsageError;
}
