#include "sellns/sequent.hpp"

namespace sellns {

bool sequent_equal(const Sequent& a, const Sequent& b) {
  if (static_cast<bool>(a.succ) != static_cast<bool>(b.succ)) return false;
  if (a.succ && !formula_equal(a.succ, b.succ)) return false;
  return ctx_equal(a.ant, b.ant);
}

bool lns_equal(const Lns& a, const Lns& b) {
  if (a.comps.size() != b.comps.size()) return false;
  for (std::size_t k = 0; k < a.comps.size(); ++k)
    if (!sequent_equal(a.comps[k], b.comps[k])) return false;
  for (std::size_t k = 0; k < a.links.size(); ++k)
    if (a.links[k].label != b.links[k].label || a.links[k].finished != b.links[k].finished) return false;
  return true;
}

Lns single_component(const Sequent& s) { return Lns{{s}, {}}; }

bool inst_equal(const RuleInst& a, const RuleInst& b) {
  return a.rule == b.rule && a.comp == b.comp && a.pos == b.pos && a.split == b.split && a.idx == b.idx &&
         a.idx2 == b.idx2 && a.labels == b.labels;
}

}  // namespace sellns
