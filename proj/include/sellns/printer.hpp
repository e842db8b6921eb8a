#pragma once

#include <string>

#include "sellns/sequent.hpp"

namespace sellns {

/// ASCII concrete syntax; parse(print_formula(f)) == f.
std::string print_formula(const FormulaPtr& f);

/// "()" for Empty, "{}" for holes, "(C, C)" for nodes, bare formula leaves.
std::string print_context(const CtxPtr& c);

/// "CTX |- F"; a missing succedent prints as a bare "CTX |-".
std::string print_sequent(const Sequent& s);

/// Components joined by "//[i]" (finished) or "//^[i]" (unfinished).
std::string print_lns(const Lns& g);

std::string print_inst(const RuleInst& inst);

// Compact canonical encodings for search-state identity (loop checking and
// memo keys). Injective but not human-readable; much cheaper than printing.
void state_key(std::string& out, const FormulaPtr& f);
void state_key(std::string& out, const CtxPtr& c);
void state_key(std::string& out, const Sequent& s);
void state_key(std::string& out, const Lns& g);

}  // namespace sellns
