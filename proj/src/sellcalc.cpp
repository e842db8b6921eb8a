#include "sellns/sellcalc.hpp"

namespace sellns {

namespace {

RuleInst at(std::string rule, Path pos, std::vector<std::string> labels = {}) {
  RuleInst inst;
  inst.rule = std::move(rule);
  inst.pos = std::move(pos);
  inst.labels = std::move(labels);
  return inst;
}

bool leaf_conn(const CtxPtr& c, Conn conn) { return c->kind == CtxKind::Leaf && c->formula->conn == conn; }

[[noreturn]] void bad(const std::string& why) { throw InvalidInstance(why); }

}  // namespace

void closing_applicable(const Sequent& seq, std::vector<RuleInst>& out) {
  if (seq.succ && seq.succ->conn == Conn::Atom && leaf_conn(seq.ant, Conn::Atom) &&
      seq.ant->formula->name == seq.succ->name)
    out.push_back(at("init", {}));
  if (seq.succ && seq.succ->conn == Conn::One && seq.ant->kind == CtxKind::Empty)
    out.push_back(at("oneR", {}));
  for (auto& lr : formula_leaves(seq.ant))
    if (lr.leaf->formula->conn == Conn::Zero) out.push_back(at("zeroL", lr.path));
}

void invertible_applicable(const Sequent& seq, std::vector<RuleInst>& out) {
  for (auto& lr : formula_leaves(seq.ant)) {
    switch (lr.leaf->formula->conn) {
      case Conn::One: out.push_back(at("oneL", lr.path)); break;
      case Conn::Tensor: out.push_back(at("tensorL", lr.path)); break;
      case Conn::Plus: out.push_back(at("plusL", lr.path)); break;
      default: break;
    }
  }
  if (!seq.succ) return;
  switch (seq.succ->conn) {
    case Conn::With: out.push_back(at("withR", {})); break;
    case Conn::Under: out.push_back(at("underR", {})); break;
    case Conn::Over: out.push_back(at("overR", {})); break;
    default: break;
  }
}

void branching_applicable(const Sequent& seq, std::vector<RuleInst>& out) {
  if (seq.succ && seq.succ->conn == Conn::Tensor && seq.ant->kind == CtxKind::Node) {
    RuleInst inst = at("tensorR", {});
    inst.split = Path{};
    out.push_back(inst);
  }
  // underL / overL match a node whose residual leaf faces its argument.
  struct Walk {
    std::vector<RuleInst>& out;
    void go(const CtxPtr& c, Path& here) {
      if (c->kind != CtxKind::Node) return;
      if (leaf_conn(c->right, Conn::Under)) out.push_back(at("underL", here));
      if (leaf_conn(c->left, Conn::Over)) out.push_back(at("overL", here));
      here.push_back(Dir::L);
      go(c->left, here);
      here.back() = Dir::R;
      go(c->right, here);
      here.pop_back();
    }
  } walk{out};
  Path root;
  walk.go(seq.ant, root);
  if (seq.succ && seq.succ->conn == Conn::Plus) {
    out.push_back(at("plusR1", {}));
    out.push_back(at("plusR2", {}));
  }
  for (auto& lr : formula_leaves(seq.ant)) {
    if (lr.leaf->formula->conn == Conn::With) {
      out.push_back(at("withL1", lr.path));
      out.push_back(at("withL2", lr.path));
    }
  }
}

void exponential_applicable(const Sequent& seq, const Signature& sig, std::vector<RuleInst>& out) {
  if (seq.succ && seq.succ->conn == Conn::Bang && restrict_upset(seq.ant, seq.succ->name, sig))
    out.push_back(at("bangR", {}, {seq.succ->name}));
  for (auto& lr : formula_leaves(seq.ant))
    if (lr.leaf->formula->conn == Conn::Bang) out.push_back(at("bangL", lr.path, {lr.leaf->formula->name}));
}

void structural_applicable(const Sequent& seq, const Signature& sig, std::vector<RuleInst>& out) {
  for (auto& rw : structural_rewrites(seq.ant, sig)) out.push_back(at(rw.rule, rw.pos, {rw.label}));
}

std::vector<RuleInst> applicable(const Sequent& seq, const Signature& sig) {
  std::vector<RuleInst> out;
  closing_applicable(seq, out);
  invertible_applicable(seq, out);
  branching_applicable(seq, out);
  exponential_applicable(seq, sig, out);
  structural_applicable(seq, sig, out);
  return out;
}

bool has_applicable(const Sequent& seq, const Signature& sig) {
  std::vector<RuleInst> tmp;
  closing_applicable(seq, tmp);
  if (!tmp.empty()) return true;
  invertible_applicable(seq, tmp);
  if (!tmp.empty()) return true;
  branching_applicable(seq, tmp);
  if (!tmp.empty()) return true;
  exponential_applicable(seq, sig, tmp);
  if (!tmp.empty()) return true;
  structural_applicable(seq, sig, tmp);
  return !tmp.empty();
}

std::vector<Sequent> apply_local(const Sequent& seq, const RuleInst& inst, const Signature& sig) {
  const std::string& r = inst.rule;
  const CtxPtr& ant = seq.ant;
  const FormulaPtr& succ = seq.succ;
  auto leaf_at = [&](Conn conn) -> FormulaPtr {
    CtxPtr c = subtree_at(ant, inst.pos);
    if (c->kind != CtxKind::Leaf || c->formula->conn != conn) bad(r + ": principal formula mismatch");
    return c->formula;
  };
  auto need_succ = [&]() {
    if (!succ) bad(r + ": rule needs a succedent");
  };
  auto need_root = [&]() {
    if (!inst.pos.empty()) bad(r + ": position must be the root");
  };
  auto label0 = [&]() -> const std::string& {
    if (inst.labels.size() != 1) bad(r + ": expects one label parameter");
    return inst.labels[0];
  };

  if (r == "init") {
    need_root();
    need_succ();
    if (succ->conn != Conn::Atom || !leaf_conn(ant, Conn::Atom) || ant->formula->name != succ->name)
      bad("init: not an atomic axiom");
    return {};
  }
  if (r == "oneR") {
    need_root();
    need_succ();
    if (succ->conn != Conn::One || ant->kind != CtxKind::Empty) bad("oneR: needs () |- 1");
    return {};
  }
  if (r == "zeroL") {
    leaf_at(Conn::Zero);
    return {};
  }
  if (r == "oneL") {
    leaf_at(Conn::One);
    return {{replace_at(ant, inst.pos, ctx_empty()), succ}};
  }
  if (r == "tensorL") {
    FormulaPtr f = leaf_at(Conn::Tensor);
    CtxPtr split = ctx_node(ctx_leaf(f->left), ctx_leaf(f->right));
    return {{replace_at(ant, inst.pos, split), succ}};
  }
  if (r == "plusL") {
    FormulaPtr f = leaf_at(Conn::Plus);
    return {{replace_at(ant, inst.pos, ctx_leaf(f->left)), succ},
            {replace_at(ant, inst.pos, ctx_leaf(f->right)), succ}};
  }
  if (r == "withL1" || r == "withL2") {
    FormulaPtr f = leaf_at(Conn::With);
    FormulaPtr pick = (r == "withL1") ? f->left : f->right;
    return {{replace_at(ant, inst.pos, ctx_leaf(pick)), succ}};
  }
  if (r == "withR") {
    need_root();
    need_succ();
    if (succ->conn != Conn::With) bad("withR: succedent is not a with");
    return {{ant, succ->left}, {ant, succ->right}};
  }
  if (r == "plusR1" || r == "plusR2") {
    need_root();
    need_succ();
    if (succ->conn != Conn::Plus) bad("plusR: succedent is not a plus");
    return {{ant, r == "plusR1" ? succ->left : succ->right}};
  }
  if (r == "underR") {
    need_root();
    need_succ();
    if (succ->conn != Conn::Under) bad("underR: succedent is not an under");
    return {{ctx_node(ctx_leaf(succ->left), ant), succ->right}};
  }
  if (r == "overR") {
    need_root();
    need_succ();
    if (succ->conn != Conn::Over) bad("overR: succedent is not an over");
    return {{ctx_node(ant, ctx_leaf(succ->right)), succ->left}};
  }
  if (r == "tensorR") {
    need_root();
    need_succ();
    if (succ->conn != Conn::Tensor) bad("tensorR: succedent is not a tensor");
    if (ant->kind != CtxKind::Node) bad("tensorR: the split must be the root node");
    return {{ant->left, succ->left}, {ant->right, succ->right}};
  }
  if (r == "underL") {
    need_succ();
    CtxPtr node = subtree_at(ant, inst.pos);
    if (node->kind != CtxKind::Node || !leaf_conn(node->right, Conn::Under))
      bad("underL: expects a node (D, F \\ G)");
    FormulaPtr imp = node->right->formula;
    return {{node->left, imp->left}, {replace_at(ant, inst.pos, ctx_leaf(imp->right)), succ}};
  }
  if (r == "overL") {
    need_succ();
    CtxPtr node = subtree_at(ant, inst.pos);
    if (node->kind != CtxKind::Node || !leaf_conn(node->left, Conn::Over))
      bad("overL: expects a node (G / F, D)");
    FormulaPtr imp = node->left->formula;
    return {{node->right, imp->right}, {replace_at(ant, inst.pos, ctx_leaf(imp->left)), succ}};
  }
  if (r == "bangR") {
    need_root();
    need_succ();
    if (succ->conn != Conn::Bang) bad("bangR: succedent is not banged");
    if (label0() != succ->name) bad("bangR: label parameter mismatch");
    auto restricted = restrict_upset(ant, succ->name, sig);
    if (!restricted) bad("bangR: context restriction is undefined");
    return {{*restricted, succ->left}};
  }
  if (r == "bangL") {
    FormulaPtr f = leaf_at(Conn::Bang);
    if (label0() != f->name) bad("bangL: label parameter mismatch");
    return {{replace_at(ant, inst.pos, ctx_leaf(f->left)), succ}};
  }
  if (r == "W" || r == "C" || r == "E1" || r == "E2" || r == "A1" || r == "A1inv" || r == "A2" ||
      r == "A2inv") {
    if (auto rewritten = apply_structural_rewrite(ant, r, inst.pos, label0(), sig))
      return {{*rewritten, succ}};
    bad(r + ": no such structural step here");
  }
  bad("unknown rule " + r);
}

std::vector<Sequent> apply_rule(const Sequent& seq, const RuleInst& inst, const Signature& sig) {
  if (!seq.succ) bad("acLL sequents need a succedent");
  if (!is_concrete(seq.ant)) bad("acLL contexts are concrete");
  if (inst.comp != 0) bad("acLL instances act on a single component");
  try {
    return apply_local(seq, inst, sig);
  } catch (const BadPath&) {
    bad(inst.rule + ": position is not valid in the context");
  }
}

bool check_step(const Sequent& seq, const RuleInst& inst, const std::vector<Sequent>& premises,
                const Signature& sig) {
  std::vector<Sequent> computed;
  try {
    computed = apply_rule(seq, inst, sig);
  } catch (const InvalidInstance&) {
    return false;
  } catch (const UnknownLabel&) {
    return false;
  }
  if (computed.size() != premises.size()) return false;
  for (std::size_t k = 0; k < computed.size(); ++k)
    if (!sequent_equal(computed[k], premises[k])) return false;
  return true;
}

}  // namespace sellns
