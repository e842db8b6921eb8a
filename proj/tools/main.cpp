#include <iostream>

#include <CLI11.hpp>

#include "sellns/fileio.hpp"
#include "sellns/latex.hpp"
#include "sellns/parser.hpp"

using namespace sellns;

namespace {

int finish(const std::string& status, int code) {
  std::cout << "RESULT: " << status << std::endl;
  return code;
}

int usage_error(const std::string& message) {
  std::cerr << "error: " << message << std::endl;
  return finish("error", 3);
}

Signature load_valid_signature(const std::string& path) {
  Signature sig = load_signature_file(path);
  auto violations = sig.validate();
  if (!violations.empty()) {
    for (const auto& v : violations) std::cerr << "signature: " << v.message << std::endl;
    throw FileFormatError("signature " + path + " is invalid");
  }
  return sig;
}

std::string capitalized(Outcome o) {
  switch (o) {
    case Outcome::Proved: return "Proved";
    case Outcome::ExhaustedUnprovable: return "Unprovable";
    case Outcome::BoundReached: return "Bound";
  }
  return "?";
}

int run_prove(const std::string& sig_path, const std::string& system_name_arg, const std::string& goal_text,
              int depth, std::uint64_t nodes, const std::string& cert_out, const std::string& latex_out) {
  Signature sig;
  try {
    sig = load_valid_signature(sig_path);
  } catch (const FileFormatError& e) {
    for (const auto& d : e.diagnostics) std::cerr << d << std::endl;
    return usage_error(e.what());
  }
  auto system = system_from_name(system_name_arg);
  if (!system) return usage_error("unknown system '" + system_name_arg + "'");
  auto goal = try_parse_lns(goal_text);
  if (!goal.ok()) {
    for (const auto& d : goal.diagnostics) std::cerr << "goal: " << d.text() << std::endl;
    return usage_error("goal does not parse");
  }
  SearchBudget budget;
  budget.max_depth = depth;
  budget.max_nodes = nodes;
  SearchResult result;
  try {
    result = prove(*system, *goal.value, sig, budget);
  } catch (const std::exception& e) {
    return usage_error(e.what());
  }
  std::cout << "goal: " << print_lns(*goal.value) << "\n";
  std::cout << "system: " << system_name_arg << "  depth: " << depth << "  expansions: " << result.nodes
            << "\n";
  if (result.certificate) {
    if (!cert_out.empty()) write_file(cert_out, certificate_to_text(*result.certificate));
    if (!latex_out.empty()) write_file(latex_out, render_latex(*result.certificate));
  } else if (!cert_out.empty() || !latex_out.empty()) {
    std::cerr << "note: no certificate to write (goal not proved)" << std::endl;
  }
  switch (result.outcome) {
    case Outcome::Proved: return finish("proved", 0);
    case Outcome::ExhaustedUnprovable: return finish("unprovable", 1);
    case Outcome::BoundReached: return finish("bound", 2);
  }
  return 3;
}

int run_check(const std::string& sig_path, const std::string& cert_path) {
  Signature sig;
  Certificate cert;
  try {
    sig = load_signature_file(sig_path);
    cert = load_certificate_file(cert_path);
  } catch (const FileFormatError& e) {
    for (const auto& d : e.diagnostics) std::cerr << d << std::endl;
    return usage_error(e.what());
  }
  Verdict verdict = check_certificate(cert, sig);
  if (verdict.accepted) return finish("accepted", 0);
  std::cout << "rejected: " << verdict.reason << "\n";
  std::cout << "at node:";
  for (int k : verdict.node_path) std::cout << " " << k;
  if (verdict.node_path.empty()) std::cout << " (root)";
  std::cout << "\n";
  return finish("rejected", 1);
}

int run_axioms(const std::string& sig_path, const std::string& system_name_arg, int depth) {
  Signature sig;
  try {
    sig = load_valid_signature(sig_path);
  } catch (const FileFormatError& e) {
    for (const auto& d : e.diagnostics) std::cerr << d << std::endl;
    return usage_error(e.what());
  }
  auto system = system_from_name(system_name_arg);
  if (!system) return usage_error("unknown system '" + system_name_arg + "'");
  SearchBudget budget;
  budget.max_depth = depth;
  for (const auto& label : sig.labels()) {
    std::cout << label << " ";
    for (Axiom a : all_axioms()) {
      Sequent goal = axiom_instance(a, label);
      SearchResult res;
      try {
        res = prove(*system, single_component(goal), sig, budget);
      } catch (const std::exception& e) {
        return usage_error(e.what());
      }
      std::cout << " " << axiom_name(a) << ":" << capitalized(res.outcome);
    }
    std::cout << "\n";
  }
  return finish("ok", 0);
}

int run_translate(const std::string& lns_text) {
  auto parsed = try_parse_lns(lns_text);
  if (!parsed.ok()) {
    for (const auto& d : parsed.diagnostics) std::cerr << "lns: " << d.text() << std::endl;
    return usage_error("linear nested sequent does not parse");
  }
  FormulaPtr interpretation;
  try {
    interpretation = interpret(*parsed.value);
  } catch (const std::exception& e) {
    return usage_error(e.what());
  }
  if (contains_par(interpretation))
    std::cout << "# extended language: \"|\" prints the par connective\n";
  std::cout << print_formula(interpretation) << "\n";
  return finish("ok", 0);
}

int run_sig_validate(const std::string& path) {
  Signature sig;
  try {
    sig = load_signature_file(path);
  } catch (const FileFormatError& e) {
    for (const auto& d : e.diagnostics) std::cerr << d << std::endl;
    return usage_error(e.what());
  }
  auto violations = sig.validate();
  if (violations.empty()) {
    std::cout << "signature is valid (" << sig.labels().size() << " labels, fingerprint "
              << sig.fingerprint() << ")\n";
    return finish("valid", 0);
  }
  for (const auto& v : violations) std::cout << v.message << "\n";
  return finish("invalid", 1);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"proof search and certificate checking for multi-modal substructural linear logics"};
  app.require_subcommand(1);

  std::string sig_path, system_arg = "sell", goal_text, cert_out, latex_out, cert_path, lns_text;
  int depth = 12;
  std::uint64_t nodes = 100000;

  auto* prove_cmd = app.add_subcommand("prove", "run backward proof search on a goal");
  prove_cmd->add_option("--sig", sig_path, "signature file")->required();
  prove_cmd->add_option("--system", system_arg, "sell | lns-assoc | lns-nonassoc")->required();
  prove_cmd->add_option("--goal", goal_text, "goal, e.g. \"(![i]a, ![j]b) |- ![i](a * b)\"")->required();
  prove_cmd->add_option("--depth", depth, "depth bound (rule applications per branch)");
  prove_cmd->add_option("--nodes", nodes, "node budget (total expansions)");
  prove_cmd->add_option("--cert", cert_out, "write the proof certificate here");
  prove_cmd->add_option("--latex", latex_out, "write a LaTeX proof tree here");

  auto* check_cmd = app.add_subcommand("check", "re-check a proof certificate without search");
  check_cmd->add_option("--sig", sig_path, "signature file")->required();
  check_cmd->add_option("--cert", cert_path, "certificate file")->required();

  auto* axioms_cmd = app.add_subcommand("axioms", "print a label x axiom provability matrix");
  axioms_cmd->add_option("--sig", sig_path, "signature file")->required();
  axioms_cmd->add_option("--system", system_arg, "sell | lns-assoc | lns-nonassoc")->required();
  axioms_cmd->add_option("--depth", depth, "depth bound");

  auto* translate_cmd = app.add_subcommand("translate", "print the formula interpretation of an LNS");
  translate_cmd->add_option("--lns", lns_text, "e.g. \"a |- b //[i] c |- d\"")->required();

  auto* sig_cmd = app.add_subcommand("sig", "signature file utilities");
  std::string validate_path;
  auto* validate_cmd = sig_cmd->add_subcommand("validate", "check pre-order and upward closure");
  validate_cmd->add_option("file", validate_path, "signature file")->required();
  sig_cmd->require_subcommand(1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e);
    return 0;
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return finish("error", 3);
  }

  try {
    if (prove_cmd->parsed()) return run_prove(sig_path, system_arg, goal_text, depth, nodes, cert_out, latex_out);
    if (check_cmd->parsed()) return run_check(sig_path, cert_path);
    if (axioms_cmd->parsed()) return run_axioms(sig_path, system_arg, depth);
    if (translate_cmd->parsed()) return run_translate(lns_text);
    if (sig_cmd->parsed() && validate_cmd->parsed()) return run_sig_validate(validate_path);
  } catch (const std::exception& e) {
    return usage_error(e.what());
  }
  return usage_error("no subcommand");
}
