#include "simplexbound/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>

#include "simplexbound/bounds.hpp"
#include "simplexbound/errors.hpp"
#include "simplexbound/oracle.hpp"
#include "simplexbound/report_json.hpp"
#include "simplexbound/selftest.hpp"

namespace simplexbound {

namespace {

using nlohmann::json;

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::SyntaxError:
    case ErrorCode::NonIntegerCoefficient:
    case ErrorCode::DimensionMismatch:
    case ErrorCode::IndexOutOfRange:
    case ErrorCode::InvalidArgument:
    case ErrorCode::ParityViolation:
    case ErrorCode::SizeOverflow:
    case ErrorCode::ZeroPolynomial:
      return kExitUsage;
    case ErrorCode::PositivityViolated:
      return kExitPositivity;
    default:
      return kExitInternal;
  }
}

struct Invocation {
  std::string command;
  json inputs = json::object();
  bool as_json = false;
};

// Raised after a command has printed its own record, to carry the status out.
struct CommandStatus {
  int code;
};

std::string point_text(const std::vector<Rational>& x) {
  std::string s = "(";
  for (std::size_t i = 0; i < x.size(); ++i) s += (i ? ", " : "") + to_string(x[i]);
  return s + ")";
}

json point_json(const std::vector<Rational>& x) {
  json arr = json::array();
  for (const auto& q : x) arr.push_back(rational_json(q));
  return arr;
}

struct BoundArgs {
  std::string poly_text;
  std::string file;
  std::optional<std::size_t> nvars;
  std::optional<unsigned long> verify;
  std::size_t max_dim = kDefaultMaxDim;
  bool no_face_recursion = false;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::InvalidArgument, "cannot read " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

int cmd_bound(const BoundArgs& args, Invocation& inv, std::ostream& out) {
  if (args.poly_text.empty() == args.file.empty()) {
    throw Error(ErrorCode::InvalidArgument, "give the polynomial either inline or with --file");
  }
  const std::string text = args.file.empty() ? args.poly_text : read_file(args.file);
  inv.inputs["polynomial"] = text;
  if (args.nvars) inv.inputs["nvars"] = *args.nvars;
  if (args.verify) inv.inputs["verify"] = *args.verify;
  inv.inputs["max_dim"] = args.max_dim;
  inv.inputs["face_recursion"] = !args.no_face_recursion;

  const MultiPoly p = parse_poly(text, args.nvars);
  BoundOptions options;
  options.max_dim = args.max_dim;
  options.face_recursion = !args.no_face_recursion;
  BoundReport report = certified_lower_bound(p, options);

  json results = bound_report_json(report);
  results["polynomial"] = format_poly(p);
  std::optional<GridResult> grid;
  int status = kExitOk;
  if (args.verify) {
    grid = grid_min(p, {p.nvars(), *args.verify});
    const bool sound = report.global_bound <= grid->value;
    results["verify"] = json{{"resolution", *args.verify},
                             {"grid_min", rational_json(grid->value)},
                             {"argmin", point_json(grid->argmin)},
                             {"sound", sound}};
    if (grid->value <= 0) {
      report.diagnostics.push_back("grid sample is not positive: input violates positivity");
      status = kExitPositivity;
    } else if (!sound) {
      report.diagnostics.push_back("certified bound exceeds the grid minimum");
      status = kExitInternal;
    }
  }

  if (inv.as_json) {
    out << output_record(inv.command, inv.inputs, results, report.diagnostics).dump(2) << "\n";
  } else {
    out << "polynomial: " << format_poly(p) << "\n";
    out << "instance: k=" << report.instance.k << " d=" << report.instance.d
        << " tau=" << report.instance.tau << "\n";
    out << "certified lower bound: " << to_string(report.global_bound) << "\n";
    out << "contributions:\n";
    for (const auto& c : report.contributions) {
      out << "  " << std::left << std::setw(16)
          << (c.kind == ContributionKind::Interior ? "interior" : "vertex-constant") << std::setw(40)
          << c.face.label() << " " << (c.value ? to_string(*c.value) : "none") << "\n";
    }
    out << "closed form (full): " << to_string(report.closed_form_full) << "\n";
    out << "closed form (simplified): " << to_string(report.closed_form_simplified) << "\n";
    if (grid) {
      out << "grid minimum (N=" << *args.verify << "): " << to_string(grid->value) << " at "
          << point_text(grid->argmin) << "\n";
      out << "soundness: "
          << (report.global_bound <= grid->value ? "bound <= grid minimum" : "VIOLATED") << "\n";
    }
    for (const auto& d : report.diagnostics) out << "diagnostic: " << d << "\n";
  }
  if (status != kExitOk) throw CommandStatus{status};
  return kExitOk;
}

int cmd_formula(std::size_t k, unsigned d, unsigned long tau, const std::string& variant,
                Invocation& inv, std::ostream& out) {
  inv.inputs = json{{"k", k}, {"d", d}, {"tau", tau}, {"variant", variant}};
  const ClosedFormParams params{k, d, tau};
  Rational value;
  if (variant == "full") value = closed_form_full(params);
  else if (variant == "simplified") value = closed_form_simplified(params);
  else value = closed_form_interior(params);
  if (inv.as_json) {
    out << output_record(inv.command, inv.inputs, json{{"value", rational_json(value)}}, {}).dump(2)
        << "\n";
  } else {
    out << variant << " bound for k=" << k << " d=" << d << " tau=" << tau << ": "
        << to_string(value) << "\n";
  }
  return kExitOk;
}

int cmd_example(std::size_t k, unsigned d, unsigned long tau, Invocation& inv, std::ostream& out) {
  inv.inputs = json{{"k", k}, {"d", d}, {"tau", tau}};
  const MultiPoly p = example_family(k, d, tau);
  const Rational upper = example_family_upper_bound(k, d, tau);
  const std::vector<Rational> witness = example_family_witness(k, d, tau);
  const Rational at_witness = eval_rational(p, witness);
  if (inv.as_json) {
    json results{{"polynomial", format_poly(p)},
                 {"min_upper_bound", rational_json(upper)},
                 {"witness", point_json(witness)},
                 {"value_at_witness", rational_json(at_witness)}};
    out << output_record(inv.command, inv.inputs, results, {}).dump(2) << "\n";
  } else {
    out << "polynomial: " << format_poly(p) << "\n";
    out << "minimum over the simplex is at most: " << to_string(upper) << "\n";
    out << "witness: " << point_text(witness) << " with value " << to_string(at_witness) << "\n";
  }
  return kExitOk;
}

int cmd_selftest(const std::string& scale, Invocation& inv, std::ostream& out) {
  inv.inputs = json{{"scale", scale}};
  const SelftestReport report =
      run_selftest(scale == "full" ? SelftestScale::Full : SelftestScale::Quick);
  std::vector<std::string> diagnostics;
  json suites = json::array();
  for (const auto& s : report.suites) {
    suites.push_back(json{{"name", s.name}, {"checks", s.checks}, {"failures", s.failures.size()}});
    for (const auto& f : s.failures) diagnostics.push_back(s.name + ": " + f);
  }
  if (inv.as_json) {
    json results{{"suites", suites},
                 {"checks", report.checks()},
                 {"failures", report.failures()},
                 {"passed", report.ok()}};
    out << output_record(inv.command, inv.inputs, results, diagnostics).dump(2) << "\n";
  } else {
    for (const auto& s : report.suites) {
      out << (s.failures.empty() ? "PASS " : "FAIL ") << s.name << ": " << s.checks << " checks, "
          << s.failures.size() << " failures\n";
    }
    for (const auto& d : diagnostics) out << "  " << d << "\n";
    out << report.checks() << " checks, " << report.failures() << " failures\n";
  }
  if (!report.ok()) throw CommandStatus{kExitInternal};
  return kExitOk;
}

void emit_error(const Invocation& inv, int code, const std::string& name, const std::string& message,
                std::ostream& out, std::ostream& err) {
  err << "error: " << message << "\n";
  if (inv.as_json) {
    json rec = output_record(inv.command, inv.inputs, nullptr, {message});
    rec["error"] = json{{"code", name}, {"exit_status", code}};
    out << rec.dump(2) << "\n";
  }
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Certified lower bounds for polynomial minima over the standard simplex",
               "simplexbound"};
  app.require_subcommand(1);
  app.fallthrough();
  Invocation inv;
  app.add_flag("--json", inv.as_json, "Emit a JSON record instead of text");

  BoundArgs bound_args;
  auto* bound = app.add_subcommand("bound", "Certified lower bound for one polynomial");
  bound->add_option("polynomial", bound_args.poly_text, "Polynomial, e.g. \"2*X1^2 - 2*X1 + 1\"");
  bound->add_option("--file", bound_args.file, "Read the polynomial from a UTF-8 file");
  bound->add_option("--nvars", bound_args.nvars, "Number of variables k")->check(CLI::PositiveNumber);
  bound->add_option("--verify", bound_args.verify, "Compare against the grid minimum at denominator N")
      ->check(CLI::PositiveNumber);
  bound->add_option("--max-dim", bound_args.max_dim, "Cap on d^k for the quotient algebra")
      ->check(CLI::PositiveNumber);
  bound->add_flag("--no-face-recursion", bound_args.no_face_recursion,
                  "Only the interior bound of the input itself");

  std::size_t k = 0;
  unsigned d = 0;
  unsigned long tau = 0;
  std::string variant = "full";
  auto* formula = app.add_subcommand("formula", "Evaluate a closed-form bound exactly");
  formula->add_option("k", k)->required()->check(CLI::PositiveNumber);
  formula->add_option("d", d)->required()->check(CLI::PositiveNumber);
  formula->add_option("tau", tau)->required()->check(CLI::PositiveNumber);
  formula->add_option("variant", variant)->check(CLI::IsMember({"full", "simplified", "interior"}));

  auto* example = app.add_subcommand("example", "Doubly exponential example family");
  example->add_option("k", k)->required()->check(CLI::PositiveNumber);
  example->add_option("d", d)->required()->check(CLI::PositiveNumber);
  example->add_option("tau", tau)->required()->check(CLI::PositiveNumber);

  std::string scale;
  auto* selftest = app.add_subcommand("selftest", "Run the invariant suites");
  selftest->add_option("scale", scale)->required()->check(CLI::IsMember({"quick", "full"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (bound->parsed()) {
      inv.command = "bound";
      return cmd_bound(bound_args, inv, out);
    }
    if (formula->parsed()) {
      inv.command = "formula";
      return cmd_formula(k, d, tau, variant, inv, out);
    }
    if (example->parsed()) {
      inv.command = "example";
      return cmd_example(k, d, tau, inv, out);
    }
    inv.command = "selftest";
    return cmd_selftest(scale, inv, out);
  } catch (const CommandStatus& s) {
    return s.code;
  } catch (const Error& e) {
    const int code = exit_code_for(e.code());
    emit_error(inv, code, std::string(error_code_name(e.code())), e.what(), out, err);
    return code;
  } catch (const std::exception& e) {
    emit_error(inv, kExitInternal, "Internal", e.what(), out, err);
    return kExitInternal;
  }
}

}  // namespace simplexbound
