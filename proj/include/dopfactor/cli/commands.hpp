#pragma once

// Command implementations behind the dopfactor executable. Each command
// returns a ReportDocument holding the deterministic JSON payload, the
// human-readable text and the process exit code.

#include <chrono>
#include <cstdio>
#include <cstddef>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "dopfactor/cli/parser.hpp"
#include "dopfactor/cli/render.hpp"
#include "dopfactor/nabla.hpp"
#include "dopfactor/reduce.hpp"

namespace dopfactor::cli {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "1.0";

enum ExitCode : int {
  kSuccess = 0,
  kVerificationFailure = 1,
  kUsageError = 2,
  kUnsupportedField = 3,
};

struct ReportDocument {
  Json payload;  // schema_version, command, input, result, trace
  std::string text;
  int exit_code = kSuccess;
  double timing_ms = 0;

  Json to_json() const {
    Json j = payload;
    j["timing_ms"] = timing_ms;
    return j;
  }
};

namespace detail {

inline ReportDocument start(const std::string& command, Json input) {
  ReportDocument doc;
  doc.payload["schema_version"] = kSchemaVersion;
  doc.payload["command"] = command;
  doc.payload["input"] = std::move(input);
  doc.payload["result"] = Json::object();
  doc.payload["trace"] = Json::array();
  return doc;
}

inline ReportDocument failure(ReportDocument doc, int code, const std::string& message) {
  doc.exit_code = code;
  doc.payload["result"] = Json{{"error", message}};
  doc.text = "error: " + message + "\n";
  return doc;
}

class Stopwatch {
 public:
  double elapsed_ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

inline std::string field_label(const Rational& base) {
  if (base == 0 || rational_sqrt(base)) return "Q";
  return "Q(sqrt(" + to_string(base) + "))";
}

template <class Fn>
ReportDocument guarded(ReportDocument doc, Fn&& body) {
  Stopwatch sw;
  try {
    body(doc);
  } catch (const ParseError& e) {
    doc = failure(std::move(doc), kUsageError, e.what());
  } catch (const FieldExtensionRequired& e) {
    doc = failure(std::move(doc), kUnsupportedField, e.what());
  } catch (const DegreeCapExceeded& e) {
    doc = failure(std::move(doc), kUsageError, std::string(e.what()) + " (raise --max-degree)");
  } catch (const std::invalid_argument& e) {
    doc = failure(std::move(doc), kUsageError, e.what());
  } catch (const std::domain_error& e) {
    doc = failure(std::move(doc), kUsageError, e.what());
  }
  doc.timing_ms = sw.elapsed_ms();
  return doc;
}

}  // namespace detail

struct AnalyzeArgs {
  std::string op;
  std::optional<Rational> field_sqrt;
  std::size_t max_degree = 64;
  std::map<std::string, Rational> params;
};

inline ReportDocument cmd_analyze(const AnalyzeArgs& args) {
  Json input{{"operator", args.op},
             {"field_sqrt", args.field_sqrt ? Json(to_string(*args.field_sqrt)) : Json(nullptr)},
             {"max_degree", args.max_degree}};
  Json params = Json::object();
  for (const auto& [k, v] : args.params) params[k] = to_string(v);
  input["params"] = params;

  return detail::guarded(detail::start("analyze", std::move(input)), [&](ReportDocument& doc) {
    ParseContext ctx;
    if (args.field_sqrt) {
      if (*args.field_sqrt == 0) throw std::invalid_argument("--field-sqrt must be nonzero");
      ctx.field_base = *args.field_sqrt;
    }
    for (const auto& [k, v] : args.params) ctx.params[k] = Scalar(v);
    const Op l = parse_operator(args.op, ctx);
    if (l.order() != Degree(2) || !(l.leading() == Poly(Scalar(1))) || !l.coeff(1).is_zero())
      throw ParseError("analyze expects an operator of the form D^2 - Q(x), got " + render(l), 0);
    const Poly q = -l.coeff(0);

    std::vector<std::string> warnings;
    AnalyzeOptions opt;
    opt.max_degree = args.max_degree;
    opt.field_base = ctx.field_base;
    if (!args.field_sqrt && q.degree() >= Degree(2) && q.degree().value() % 2 == 0 &&
        !field_sqrt(q.leading(), Rational(0)) && q.leading().is_rational()) {
      opt.field_base = q.leading().rational_part();
      warnings.push_back("no --field-sqrt given; working over " + detail::field_label(opt.field_base) +
                         " inferred from the leading coefficient of Q");
    }

    const ReducibilityReport rep = analyze_order2(q, opt);
    const std::string field = detail::field_label(opt.field_base);
    doc.payload["input"]["normalized"] = render(l);

    Json result{{"verdict", to_string(rep.verdict)}, {"side", to_string(rep.side)}, {"field", field + "(x)"}};
    std::ostringstream text;
    text << "operator: " << render(l) << "\n";
    text << "field: " << field << "(x)\n";
    for (const auto& w : warnings) text << "warning: " << w << "\n";
    text << "trace:\n";
    for (const auto& t : rep.trace) {
      doc.payload["trace"].push_back(Json{{"screen", t.screen}, {"passed", t.passed}, {"detail", t.detail}});
      text << "  [" << (t.passed ? "pass" : "fail") << "] " << t.screen << ": " << t.detail << "\n";
    }
    if (rep.verdict == Verdict::Reducible) {
      const RatOp& f = *rep.witness_factor;
      const RatFn w = -f.coeff(0);
      result["witness_factor"] = render(f);
      result["cofactor"] = render(*rep.cofactor);
      result["riccati_solution"] = render(w);
      result["witness_poly"] = render(*rep.witness_poly);
      result["branch"] = Json{{"epsilon", rep.branch->epsilon}, {"r", render(rep.branch->r)}};
      result["degree_used"] = *rep.degree_used;
      if (rep.side == Side::Left) {
        result["left_factor"] = render(*rep.left_factor);
        text << "REDUCIBLE (left factor: " << render(*rep.left_factor) << ")\n";
      } else {
        text << "REDUCIBLE (right factor: " << render(f) << ")\n";
      }
    } else {
      text << "IRREDUCIBLE over " << field << "(x)\n";
    }
    if (!warnings.empty()) result["warnings"] = warnings;
    doc.payload["result"] = std::move(result);
    doc.text = text.str();
  });
}

struct NablaArgs {
  std::string sub;  // mu | verify | sweep | h
  std::size_t d = 0;
};

namespace detail {

inline Json minors_json(const nabla::MinorSequence& s) {
  Json a = Json::array();
  for (const auto& m : s.minors) a.push_back(to_string(m));
  return a;
}

inline void nabla_mu(ReportDocument& doc, std::size_t d) {
  const BigInt mu = nabla::mu(d);
  doc.payload["result"] = Json{{"d", d}, {"mu", to_string(mu)}, {"digits", decimal_digits(mu)}};
  doc.text = "mu(" + std::to_string(d) + ") = " + to_string(mu) + "\n";
  if (mu == 0) doc.exit_code = kVerificationFailure;
}

inline void nabla_verify(ReportDocument& doc, std::size_t d) {
  if (d < 2) throw std::invalid_argument("nabla verify needs --d >= 2");
  std::ostringstream text;
  bool ok = true;
  auto check = [&](const std::string& name, bool passed, const std::string& detail) {
    doc.payload["trace"].push_back(Json{{"check", name}, {"passed", passed}, {"detail", detail}});
    text << "  [" << (passed ? "pass" : "FAIL") << "] " << name << (detail.empty() ? "" : ": " + detail) << "\n";
    ok = ok && passed;
  };
  const auto rec = nabla::minors_recurrence(d);
  const auto direct = nabla::minors_direct(d);
  check("recurrence-vs-bareiss", rec.minors == direct.minors, "nabla_0..nabla_" + std::to_string(d + 1));
  if (d <= 6) check("recurrence-vs-cofactor", rec.minors == nabla::minors_cofactor(d).minors, "");
  check("mu-nonzero", rec.mu() != 0, "mu = " + to_string(rec.mu()));
  if (d % 2 == 0) check("mu-odd", mpz_odd_p(rec.mu().get_mpz_t()) != 0, "");
  const auto ineq = nabla::verify_inequalities(rec);
  std::string detail = std::to_string(ineq.chain_checked) + " chain inequalities, terminal bound";
  if (ineq.first_violation)
    detail += "; first violation: " + ineq.first_violation->check + " at p=" +
              std::to_string(ineq.first_violation->p);
  check("inequality-chain", ineq.passed(), detail);

  doc.payload["result"] =
      Json{{"d", d}, {"status", ok ? "PASS" : "FAIL"}, {"mu", to_string(rec.mu())}, {"minors", minors_json(rec)}};
  doc.text = "nabla verify d=" + std::to_string(d) + "\n" + text.str() + (ok ? "PASS\n" : "FAIL\n");
  if (!ok) doc.exit_code = kVerificationFailure;
}

inline void nabla_sweep(ReportDocument& doc, std::size_t d_max) {
  const auto sum = nabla::sweep(d_max);
  std::ostringstream text;
  text << "   d  mu!=0  parity  chain  digits\n";
  auto flag = [](const std::optional<bool>& b) { return b ? (*b ? "ok" : "FAIL") : "-"; };
  for (const auto& r : sum.rows) {
    doc.payload["trace"].push_back(Json{{"d", r.d},
                                        {"mu_nonzero", r.mu_nonzero},
                                        {"parity_odd", r.parity_odd ? Json(*r.parity_odd) : Json(nullptr)},
                                        {"chain_ok", r.chain_ok ? Json(*r.chain_ok) : Json(nullptr)},
                                        {"mu_digits", r.mu_digits}});
    char line[96];
    std::snprintf(line, sizeof line, "%4zu  %5s  %6s  %5s  %6zu\n", r.d, r.mu_nonzero ? "ok" : "FAIL",
                  flag(r.parity_odd), flag(r.chain_ok), r.mu_digits);
    text << line;
  }
  doc.payload["result"] = Json{{"d_max", d_max},
                               {"status", sum.passed() ? "PASS" : "FAIL"},
                               {"checked", sum.rows.size()},
                               {"failures", sum.failures},
                               {"parity_checked", sum.parity_checked},
                               {"chains_checked", sum.chains_checked},
                               {"max_digits", sum.max_digits}};
  text << "summary: " << sum.rows.size() << " values of d, " << sum.failures << " failures, max " << sum.max_digits
       << " digits\n"
       << (sum.passed() ? "PASS\n" : "FAIL\n");
  doc.text = text.str();
  if (!sum.passed()) doc.exit_code = kVerificationFailure;
}

inline void nabla_h(ReportDocument& doc, std::size_t d) {
  if (d % 2 == 0) throw std::invalid_argument("nabla h needs an odd --d");
  const auto h = nabla::h_closed_forms(d);
  const BigInt dd = static_cast<unsigned long>(d);
  const BigInt e1 = 56 * dd * dd + 112 * dd + 120;
  const BigInt e2 = 16 * dd * dd + 32 * dd + 48;
  const BigInt e3 = 24 * (dd + 1) * (dd + 1);
  const auto minimum = nabla::h_minimum(d);
  bool ok = h.at_d_minus_1_half == e1 && h.at_d_plus_1_half == e2 && h.at_d_plus_3_half == e3;
  Json min_json = nullptr;
  if (minimum) {
    ok = ok && minimum->value > 0 && minimum->value == h.at_d_plus_1_half;
    min_json = Json{{"p", minimum->p}, {"value", to_string(minimum->value)}};
  }
  const std::size_t half = d / 2;
  doc.payload["result"] = Json{{"d", d},
                               {"status", ok ? "PASS" : "FAIL"},
                               {"h_d_minus_1_half", Json{{"p", half}, {"value", to_string(h.at_d_minus_1_half)}}},
                               {"h_d_plus_1_half", Json{{"p", half + 1}, {"value", to_string(h.at_d_plus_1_half)}}},
                               {"h_d_plus_3_half", Json{{"p", half + 2}, {"value", to_string(h.at_d_plus_3_half)}}},
                               {"minimum", min_json}};
  std::ostringstream text;
  text << "h(" << half << ") = " << h.at_d_minus_1_half << "   (56d^2+112d+120 = " << e1 << ")\n"
       << "h(" << half + 1 << ") = " << h.at_d_plus_1_half << "   (16d^2+32d+48 = " << e2 << ")\n"
       << "h(" << half + 2 << ") = " << h.at_d_plus_3_half << "   (24(d+1)^2 = " << e3 << ")\n";
  if (minimum)
    text << "min over 2<=p<=" << d - 1 << ": h(" << minimum->p << ") = " << minimum->value << "\n";
  else
    text << "min over 2<=p<=d-1: empty range\n";
  text << (ok ? "PASS\n" : "FAIL\n");
  doc.text = text.str();
  if (!ok) doc.exit_code = kVerificationFailure;
}

}  // namespace detail

inline ReportDocument cmd_nabla(const NablaArgs& args) {
  Json input{{"subcommand", args.sub}, {args.sub == "sweep" ? "max_d" : "d", args.d}};
  return detail::guarded(detail::start("nabla " + args.sub, std::move(input)), [&](ReportDocument& doc) {
    if (args.sub == "mu")
      detail::nabla_mu(doc, args.d);
    else if (args.sub == "verify")
      detail::nabla_verify(doc, args.d);
    else if (args.sub == "sweep")
      detail::nabla_sweep(doc, args.d);
    else if (args.sub == "h")
      detail::nabla_h(doc, args.d);
    else
      throw std::invalid_argument("unknown nabla subcommand '" + args.sub + "'");
  });
}

struct TransformArgs {
  std::string kind;  // fourier | adjoint | translate | twist
  std::string op;
  std::string c = "0";
  std::string r = "0";
  std::optional<Rational> field_sqrt;
};

inline ReportDocument cmd_transform(const TransformArgs& args) {
  Json input{{"operator", args.op}};
  if (args.kind == "translate") input["c"] = args.c;
  if (args.kind == "twist") input["r"] = args.r;
  if (args.field_sqrt) input["field_sqrt"] = to_string(*args.field_sqrt);
  return detail::guarded(detail::start(args.kind, std::move(input)), [&](ReportDocument& doc) {
    ParseContext ctx;
    if (args.field_sqrt) ctx.field_base = *args.field_sqrt;
    const Op l = parse_operator(args.op, ctx);
    Op out;
    if (args.kind == "fourier") {
      out = fourier(l);
    } else if (args.kind == "adjoint") {
      out = adjoint(l);
    } else if (args.kind == "translate") {
      const Poly c = parse_polynomial(args.c, ctx);
      if (c.degree() > Degree(0)) throw ParseError("--c must be a constant", 0);
      out = translate(l, c.coeff(0));
    } else if (args.kind == "twist") {
      out = twist(l, parse_polynomial(args.r, ctx));
    } else {
      throw std::invalid_argument("unknown transform '" + args.kind + "'");
    }
    doc.payload["result"] = Json{{"operator", render(out)}};
    doc.text = render(out) + "\n";
  });
}

}  // namespace dopfactor::cli
