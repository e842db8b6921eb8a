#pragma once

#include <optional>
#include <vector>

#include "sellns/context.hpp"

namespace sellns {

// One sequent Γ ⊢ F. The succedent may be absent only inside linear nested
// sequents: promotion consumes it in the outer component, and the D rule
// creates succedent-free inner components.
struct Sequent {
  CtxPtr ant;
  FormulaPtr succ;  // may be null in LNS components
};

bool sequent_equal(const Sequent& a, const Sequent& b);

struct Link {
  std::string label;
  bool finished = true;  // ⤳i when true, ⤳̂i when false
};

// Linear nested sequent: a nonempty component list joined by nesting links.
// Reachable states keep at most one unfinished link, and only as the last.
struct Lns {
  std::vector<Sequent> comps;
  std::vector<Link> links;  // links.size() == comps.size() - 1
};

bool lns_equal(const Lns& a, const Lns& b);
Lns single_component(const Sequent& s);

// One rule application, sufficient to recompute the premises from the
// conclusion during certificate checking.
struct RuleInst {
  std::string rule;
  int comp = 0;                      // component index (0 in the plain calculus)
  Path pos;                          // principal position for tree-context rules
  std::optional<Path> split;         // split node for context-splitting tree rules
  int idx = -1;                      // list position (associative mode)
  int idx2 = -1;                     // split / segment bound (associative mode)
  std::vector<std::string> labels;   // label parameters, rule subject first
};

bool inst_equal(const RuleInst& a, const RuleInst& b);

struct InvalidInstance : std::runtime_error {
  explicit InvalidInstance(const std::string& why) : std::runtime_error("invalid rule instance: " + why) {}
};

}  // namespace sellns
