#pragma once

#include "sellns/search.hpp"

namespace sellns {

std::string latex_formula(const FormulaPtr& f);
std::string latex_context(const CtxPtr& c);
std::string latex_sequent(const Sequent& s);
std::string latex_lns(const Lns& g);
std::string latex_rule_name(const RuleInst& inst);

// Standalone documents; the certificate renders as a nested proof tree in
// the style of the usual infer displays.
std::string render_latex(const FormulaPtr& f);
std::string render_latex(const Sequent& s);
std::string render_latex(const Lns& g);
std::string render_latex(const Certificate& cert);

}  // namespace sellns
