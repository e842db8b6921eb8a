#include "sellns/lnscalc.hpp"

#include <algorithm>

namespace sellns {

namespace {

[[noreturn]] void bad(const std::string& why) { throw InvalidInstance(why); }

bool last_link_unfinished(const Lns& g) { return !g.links.empty() && !g.links.back().finished; }

void require_signature(const Signature& sig, LnsMode mode) {
  if (mode == LnsMode::Associative && sig.mode() != SigMode::AssociativeFunctorial)
    throw ModeMismatch("associative mode needs an associative signature (A1, A2, K everywhere)");
  if (mode == LnsMode::NonAssociative && sig.mode() == SigMode::Plain)
    throw ModeMismatch("linear nested systems need a functorial signature (K everywhere)");
}

RuleInst mk(std::string rule, int comp, Path pos = {}, std::vector<std::string> labels = {}) {
  RuleInst inst;
  inst.rule = std::move(rule);
  inst.comp = comp;
  inst.pos = std::move(pos);
  inst.labels = std::move(labels);
  return inst;
}

bool is_local_rule(const std::string& r) {
  static const std::vector<std::string> local = {
      "init",   "oneR",  "zeroL",  "oneL",   "tensorL", "plusL",  "withR",  "underR", "overR",
      "tensorR", "underL", "overL", "plusR1", "plusR2",  "withL1", "withL2", "W",      "C",
      "E1",     "E2",    "A1",     "A1inv",  "A2",      "A2inv"};
  return std::find(local.begin(), local.end(), r) != local.end();
}

// ---- associative (list) rule engine -------------------------------------

using FList = std::vector<FormulaPtr>;

FList slice(const FList& xs, std::size_t from, std::size_t to) {
  return FList(xs.begin() + from, xs.begin() + to);
}

FList splice(const FList& xs, std::size_t from, std::size_t to, const FList& mid) {
  FList out(xs.begin(), xs.begin() + from);
  out.insert(out.end(), mid.begin(), mid.end());
  out.insert(out.end(), xs.begin() + to, xs.end());
  return out;
}

void assoc_local_applicable(const Sequent& seq, const Signature& sig, int comp,
                            std::vector<RuleInst>& out) {
  FList xs = ctx_to_list(seq.ant);
  int n = static_cast<int>(xs.size());
  auto add = [&](std::string rule, int idx, int idx2 = -1, std::vector<std::string> labels = {}) {
    RuleInst inst = mk(std::move(rule), comp, {}, std::move(labels));
    inst.idx = idx;
    inst.idx2 = idx2;
    out.push_back(inst);
  };
  // closing
  if (seq.succ && seq.succ->conn == Conn::Atom && n == 1 && xs[0]->conn == Conn::Atom &&
      xs[0]->name == seq.succ->name)
    add("init", -1);
  if (seq.succ && seq.succ->conn == Conn::One && n == 0) add("oneR", -1);
  for (int k = 0; k < n; ++k)
    if (xs[k]->conn == Conn::Zero) add("zeroL", k);
  if (!seq.succ) return;
  // invertible
  for (int k = 0; k < n; ++k) {
    if (xs[k]->conn == Conn::One) add("oneL", k);
    if (xs[k]->conn == Conn::Tensor) add("tensorL", k);
    if (xs[k]->conn == Conn::Plus) add("plusL", k);
  }
  if (seq.succ->conn == Conn::With) add("withR", -1);
  if (seq.succ->conn == Conn::Under) add("underR", -1);
  if (seq.succ->conn == Conn::Over) add("overR", -1);
  // branching
  if (seq.succ->conn == Conn::Tensor)
    for (int s = 0; s <= n; ++s) add("tensorR", s);
  for (int m = 0; m < n; ++m) {
    if (xs[m]->conn == Conn::Under)
      for (int l = 0; l <= m; ++l) add("underL", m, l);
    if (xs[m]->conn == Conn::Over)
      for (int r = m; r < n; ++r) add("overL", m, r);
  }
  if (seq.succ->conn == Conn::Plus) {
    add("plusR1", -1);
    add("plusR2", -1);
  }
  for (int k = 0; k < n; ++k)
    if (xs[k]->conn == Conn::With) {
      add("withL1", k);
      add("withL2", k);
    }
  // structural, list forms; A1/A2 are absorbed by flattening
  for (int k = 0; k < n; ++k) {
    if (xs[k]->conn != Conn::Bang) continue;
    const std::string& label = xs[k]->name;
    if (!sig.has_label(label)) continue;
    if (sig.has(label, Axiom::W)) add("W", k, -1, {label});
    if (sig.has(label, Axiom::C)) add("C", k, -1, {label});
    if (sig.has(label, Axiom::E)) {
      if (k + 1 < n) add("E1", k, -1, {label});
      if (k > 0) add("E2", k - 1, -1, {label});
    }
  }
}

std::vector<Sequent> assoc_apply_local(const Sequent& seq, const RuleInst& inst, const Signature& sig) {
  const std::string& r = inst.rule;
  if (!inst.pos.empty()) bad(r + ": tree positions do not apply to list contexts");
  FList xs = ctx_to_list(seq.ant);
  int n = static_cast<int>(xs.size());
  const FormulaPtr& succ = seq.succ;
  auto elem = [&](Conn conn) -> FormulaPtr {
    if (inst.idx < 0 || inst.idx >= n || xs[inst.idx]->conn != conn)
      bad(r + ": principal formula mismatch");
    return xs[inst.idx];
  };
  auto need_succ = [&]() {
    if (!succ) bad(r + ": rule needs a succedent");
  };
  auto from = [&](const FList& ys, FormulaPtr f) { return Sequent{ctx_from_list(ys), std::move(f)}; };

  if (r == "init") {
    need_succ();
    if (n != 1 || succ->conn != Conn::Atom || xs[0]->conn != Conn::Atom || xs[0]->name != succ->name)
      bad("init: not an atomic axiom");
    return {};
  }
  if (r == "oneR") {
    need_succ();
    if (n != 0 || succ->conn != Conn::One) bad("oneR: needs [] |- 1");
    return {};
  }
  if (r == "zeroL") {
    elem(Conn::Zero);
    return {};
  }
  if (r == "oneL") {
    need_succ();
    elem(Conn::One);
    return {from(splice(xs, inst.idx, inst.idx + 1, {}), succ)};
  }
  if (r == "tensorL") {
    need_succ();
    FormulaPtr f = elem(Conn::Tensor);
    return {from(splice(xs, inst.idx, inst.idx + 1, {f->left, f->right}), succ)};
  }
  if (r == "plusL") {
    need_succ();
    FormulaPtr f = elem(Conn::Plus);
    return {from(splice(xs, inst.idx, inst.idx + 1, {f->left}), succ),
            from(splice(xs, inst.idx, inst.idx + 1, {f->right}), succ)};
  }
  if (r == "withL1" || r == "withL2") {
    need_succ();
    FormulaPtr f = elem(Conn::With);
    return {from(splice(xs, inst.idx, inst.idx + 1, {r == "withL1" ? f->left : f->right}), succ)};
  }
  if (r == "withR") {
    need_succ();
    if (succ->conn != Conn::With) bad("withR: succedent is not a with");
    return {from(xs, succ->left), from(xs, succ->right)};
  }
  if (r == "plusR1" || r == "plusR2") {
    need_succ();
    if (succ->conn != Conn::Plus) bad("plusR: succedent is not a plus");
    return {from(xs, r == "plusR1" ? succ->left : succ->right)};
  }
  if (r == "underR") {
    need_succ();
    if (succ->conn != Conn::Under) bad("underR: succedent is not an under");
    return {from(splice(xs, 0, 0, {succ->left}), succ->right)};
  }
  if (r == "overR") {
    need_succ();
    if (succ->conn != Conn::Over) bad("overR: succedent is not an over");
    FList ys = xs;
    ys.push_back(succ->right);
    return {from(ys, succ->left)};
  }
  if (r == "tensorR") {
    need_succ();
    if (succ->conn != Conn::Tensor) bad("tensorR: succedent is not a tensor");
    if (inst.idx < 0 || inst.idx > n) bad("tensorR: split out of range");
    return {from(slice(xs, 0, inst.idx), succ->left), from(slice(xs, inst.idx, n), succ->right)};
  }
  if (r == "underL") {
    need_succ();
    FormulaPtr imp = elem(Conn::Under);
    int m = inst.idx, l = inst.idx2;
    if (l < 0 || l > m) bad("underL: segment out of range");
    return {from(slice(xs, l, m), imp->left), from(splice(xs, l, m + 1, {imp->right}), succ)};
  }
  if (r == "overL") {
    need_succ();
    FormulaPtr imp = elem(Conn::Over);
    int m = inst.idx, rr = inst.idx2;
    if (rr < m || rr >= n) bad("overL: segment out of range");
    return {from(slice(xs, m + 1, rr + 1), imp->right), from(splice(xs, m, rr + 1, {imp->left}), succ)};
  }
  if (r == "W" || r == "C") {
    need_succ();
    FormulaPtr f = elem(Conn::Bang);
    const std::string& label = f->name;
    if (!inst.labels.empty() && inst.labels[0] != label) bad(r + ": label parameter mismatch");
    if (r == "W") {
      if (!sig.has(label, Axiom::W)) bad("W: feature missing");
      return {from(splice(xs, inst.idx, inst.idx + 1, {}), succ)};
    }
    if (!sig.has(label, Axiom::C)) bad("C: feature missing");
    return {from(splice(xs, inst.idx, inst.idx + 1, {f, f}), succ)};
  }
  if (r == "E1" || r == "E2") {
    // adjacent swap at (idx, idx+1); the banged element sits left for E1 and
    // right for E2
    need_succ();
    int k = inst.idx;
    if (k < 0 || k + 1 >= n) bad(r + ": swap out of range");
    const FormulaPtr& banged = (r == "E1") ? xs[k] : xs[k + 1];
    if (banged->conn != Conn::Bang) bad(r + ": no banged element at the swap");
    if (!inst.labels.empty() && inst.labels[0] != banged->name) bad(r + ": label parameter mismatch");
    if (!sig.has(banged->name, Axiom::E)) bad(r + ": feature missing");
    return {from(splice(xs, k, k + 2, {xs[k + 1], xs[k]}), succ)};
  }
  bad("unknown associative rule " + r);
}

}  // namespace

// ---- interpretation ------------------------------------------------------

FormulaPtr big_tensor(const CtxPtr& c) {
  switch (c->kind) {
    case CtxKind::Empty: return one();
    case CtxKind::Leaf: return c->formula;
    case CtxKind::Hole: throw NotConcrete();
    case CtxKind::Node: return tensor(big_tensor(c->left), big_tensor(c->right));
  }
  throw NotConcrete();
}

FormulaPtr interpret(const Lns& g) {
  for (const Sequent& s : g.comps)
    if (!s.succ) throw MissingSuccedent();
  std::size_t last = g.comps.size() - 1;
  FormulaPtr acc = under(big_tensor(g.comps[last].ant), g.comps[last].succ);
  for (std::size_t k = last; k-- > 0;) {
    FormulaPtr component = under(big_tensor(g.comps[k].ant), g.comps[k].succ);
    acc = par(component, bang(g.links[k].label, acc));
  }
  return acc;
}

FormulaPtr interpret(const Lns& g, const Signature& sig) {
  std::set<std::string> labels;
  for (const Sequent& s : g.comps) {
    collect_labels(s.ant, labels);
    collect_labels(s.succ, labels);
  }
  for (const Link& l : g.links) labels.insert(l.label);
  for (const auto& l : labels)
    if (!sig.has_label(l)) throw UnknownLabel(l);
  return interpret(g);
}

// ---- rule enumeration ----------------------------------------------------

std::vector<RuleInst> lns_applicable(const Lns& g, const Signature& sig, LnsMode mode) {
  require_signature(sig, mode);
  std::vector<RuleInst> out;
  const int n = static_cast<int>(g.comps.size());
  const int last = n - 1;
  const Sequent& rm = g.comps[last];
  const bool assoc = mode == LnsMode::Associative;
  const bool unfinished = last_link_unfinished(g);
  const bool rm_concrete = is_concrete(rm.ant);

  // Closing. init and oneR close single-component LNS only; zeroL closes
  // the whole LNS from either of the two rightmost components.
  if (n == 1 && rm.succ) {
    if (assoc) {
      std::vector<RuleInst> tmp;
      assoc_local_applicable(rm, sig, last, tmp);
      for (auto& inst : tmp)
        if (inst.rule == "init" || inst.rule == "oneR") out.push_back(inst);
    } else {
      std::vector<RuleInst> tmp;
      closing_applicable(rm, tmp);
      for (auto& inst : tmp)
        if (inst.rule == "init" || inst.rule == "oneR") {
          inst.comp = last;
          out.push_back(inst);
        }
    }
  }
  for (int c = std::max(0, n - 2); c <= last; ++c) {
    if (assoc) {
      FList xs = ctx_to_list(g.comps[c].ant);
      for (int k = 0; k < static_cast<int>(xs.size()); ++k)
        if (xs[k]->conn == Conn::Zero) {
          RuleInst inst = mk("zeroL", c);
          inst.idx = k;
          out.push_back(inst);
        }
    } else {
      for (auto& lr : formula_leaves(g.comps[c].ant))
        if (lr.leaf->formula->conn == Conn::Zero) out.push_back(mk("zeroL", c, lr.path));
    }
  }

  // Local logical rules in the rightmost component. They need a succedent
  // and, in non-associative mode, a hole-free antecedent.
  if (rm.succ && (assoc || rm_concrete)) {
    std::vector<RuleInst> tmp;
    if (assoc) {
      assoc_local_applicable(rm, sig, last, tmp);
      for (auto& inst : tmp)
        if (inst.rule != "init" && inst.rule != "oneR" && inst.rule != "zeroL" &&
            inst.rule != "W" && inst.rule != "C" && inst.rule != "E1" && inst.rule != "E2")
          out.push_back(inst);
    } else {
      invertible_applicable(rm, tmp);
      branching_applicable(rm, tmp);
      for (auto& inst : tmp) {
        inst.comp = last;
        out.push_back(inst);
      }
    }
  }

  // Exponential rules.
  // release
  if (unfinished && n >= 2) {
    const Sequent& outer = g.comps[n - 2];
    if (!outer.succ && is_all_holes(outer.ant))
      out.push_back(mk("release", n - 2, {}, {g.links.back().label}));
  }
  // bang_t: T-dereliction on any banged leaf of the rightmost component.
  if (assoc) {
    FList xs = ctx_to_list(rm.ant);
    for (int k = 0; k < static_cast<int>(xs.size()); ++k)
      if (xs[k]->conn == Conn::Bang && sig.has_label(xs[k]->name) && sig.has(xs[k]->name, Axiom::T)) {
        RuleInst inst = mk("bang_t", last, {}, {xs[k]->name});
        inst.idx = k;
        out.push_back(inst);
      }
  } else {
    for (auto& lr : formula_leaves(rm.ant)) {
      const FormulaPtr& f = lr.leaf->formula;
      if (f->conn == Conn::Bang && sig.has_label(f->name) && sig.has(f->name, Axiom::T))
        out.push_back(mk("bang_t", last, lr.path, {f->name}));
    }
  }
  // migration: bang_k / bang_4 / w_move between the two rightmost components
  if (unfinished && n >= 2) {
    const std::string& i = g.links.back().label;
    const Sequent& outer = g.comps[n - 2];
    const Sequent& inner = g.comps[last];
    auto movable = [&](const FormulaPtr& f, const Path& pos, int idx) {
      if (f->conn != Conn::Bang || !sig.has_label(f->name)) return;
      const std::string& j = f->name;
      auto push = [&](std::string rule, std::vector<std::string> labels) {
        RuleInst inst = mk(std::move(rule), n - 2, pos, std::move(labels));
        inst.idx = idx;
        out.push_back(inst);
      };
      // migration needs the matching inner hole in non-associative mode
      bool insertable = assoc || find_hole(inner.ant, pos).has_value();
      if (insertable && sig.leq(i, j)) push("bang_k", {i, j});
      if (insertable && sig.leq(i, j) && sig.has(j, Axiom::Four)) push("bang_4", {i, j});
      if (sig.has(j, Axiom::W)) push("w_move", {i, j});
    };
    if (assoc) {
      FList xs = ctx_to_list(outer.ant);
      if (!xs.empty()) movable(xs.back(), {}, static_cast<int>(xs.size()) - 1);
    } else {
      for (auto& lr : formula_leaves(outer.ant)) movable(lr.leaf->formula, lr.path, -1);
    }
  }
  // promotion and the D rule open a new nesting; blocked while one is open.
  if (!unfinished && (assoc || rm_concrete)) {
    if (rm.succ && rm.succ->conn == Conn::Bang && sig.has_label(rm.succ->name))
      out.push_back(mk("bang", last, {}, {rm.succ->name}));
    if (assoc) {
      FList xs = ctx_to_list(rm.ant);
      if (!xs.empty() && xs.back()->conn == Conn::Bang && sig.has_label(xs.back()->name) &&
          sig.has(xs.back()->name, Axiom::D)) {
        RuleInst inst = mk("bang_d", last, {}, {xs.back()->name});
        inst.idx = static_cast<int>(xs.size()) - 1;
        out.push_back(inst);
      }
    } else {
      for (auto& lr : formula_leaves(rm.ant)) {
        const FormulaPtr& f = lr.leaf->formula;
        if (f->conn == Conn::Bang && sig.has_label(f->name) && sig.has(f->name, Axiom::D))
          out.push_back(mk("bang_d", last, lr.path, {f->name}));
      }
    }
  }

  // Structural rules in the rightmost component.
  if (rm.succ) {
    if (assoc) {
      std::vector<RuleInst> tmp;
      assoc_local_applicable(rm, sig, last, tmp);
      for (auto& inst : tmp)
        if (inst.rule == "W" || inst.rule == "C" || inst.rule == "E1" || inst.rule == "E2")
          out.push_back(inst);
    } else if (rm_concrete) {
      std::vector<RuleInst> tmp;
      structural_applicable(rm, sig, tmp);
      for (auto& inst : tmp) {
        inst.comp = last;
        out.push_back(inst);
      }
    }
  }
  return out;
}

// ---- rule application ----------------------------------------------------

std::vector<Lns> lns_apply(const Lns& g, const RuleInst& inst, const Signature& sig, LnsMode mode) {
  require_signature(sig, mode);
  const int n = static_cast<int>(g.comps.size());
  const int last = n - 1;
  const bool assoc = mode == LnsMode::Associative;
  const std::string& r = inst.rule;

  auto with_rightmost = [&](const std::vector<Sequent>& replacements) {
    std::vector<Lns> out;
    for (const Sequent& s : replacements) {
      Lns h = g;
      h.comps[last] = s;
      out.push_back(std::move(h));
    }
    return out;
  };

  if (r == "zeroL") {
    if (inst.comp != last && inst.comp != n - 2) bad("zeroL: not an end-active component");
    const Sequent& target = g.comps[inst.comp];
    if (assoc) {
      if (!inst.pos.empty()) bad("zeroL: tree positions do not apply to list contexts");
      FList xs = ctx_to_list(target.ant);
      if (inst.idx < 0 || inst.idx >= static_cast<int>(xs.size()) || xs[inst.idx]->conn != Conn::Zero)
        bad("zeroL: principal formula mismatch");
    } else {
      CtxPtr c = subtree_at(target.ant, inst.pos);
      if (c->kind != CtxKind::Leaf || c->formula->conn != Conn::Zero)
        bad("zeroL: principal formula mismatch");
    }
    return {};
  }

  if (is_local_rule(r)) {
    if (inst.comp != last) bad(r + ": local rules act on the rightmost component");
    const Sequent& rm = g.comps[last];
    if (!rm.succ) bad(r + ": component has no succedent");
    if ((r == "init" || r == "oneR") && n != 1) bad(r + ": closes single-component LNS only");
    if (!assoc && !is_concrete(rm.ant)) bad(r + ": antecedent is not concrete");
    std::vector<Sequent> premises =
        assoc ? assoc_apply_local(rm, inst, sig) : apply_local(rm, inst, sig);
    if (premises.empty()) return {};
    return with_rightmost(premises);
  }

  if (r == "bang_t") {
    if (inst.comp != last) bad("bang_t: acts on the rightmost component");
    const Sequent& rm = g.comps[last];
    if (assoc) {
      if (!inst.pos.empty()) bad("bang_t: tree positions do not apply to list contexts");
      FList xs = ctx_to_list(rm.ant);
      if (inst.idx < 0 || inst.idx >= static_cast<int>(xs.size()) || xs[inst.idx]->conn != Conn::Bang)
        bad("bang_t: principal formula mismatch");
      FormulaPtr f = xs[inst.idx];
      if (!sig.has(f->name, Axiom::T)) bad("bang_t: T missing from f(" + f->name + ")");
      xs[inst.idx] = f->left;
      return with_rightmost({Sequent{ctx_from_list(xs), rm.succ}});
    }
    CtxPtr c = subtree_at(rm.ant, inst.pos);
    if (c->kind != CtxKind::Leaf || c->formula->conn != Conn::Bang) bad("bang_t: principal formula mismatch");
    if (!sig.has(c->formula->name, Axiom::T)) bad("bang_t: T missing from f(" + c->formula->name + ")");
    return with_rightmost({Sequent{replace_at(rm.ant, inst.pos, ctx_leaf(c->formula->left)), rm.succ}});
  }

  if (r == "bang") {
    if (inst.comp != last || !inst.pos.empty()) bad("bang: promotes the rightmost component");
    if (last_link_unfinished(g)) bad("bang: a nesting is still unfinished");
    const Sequent& rm = g.comps[last];
    if (!rm.succ || rm.succ->conn != Conn::Bang) bad("bang: succedent is not banged");
    const std::string& i = rm.succ->name;
    if (inst.labels.size() != 1 || inst.labels[0] != i) bad("bang: label parameter mismatch");
    if (!is_concrete(rm.ant)) bad("bang: antecedent is not concrete");
    Lns h = g;
    h.comps[last] = Sequent{rm.ant, nullptr};
    h.comps.push_back(Sequent{assoc ? ctx_empty() : skeleton(rm.ant), rm.succ->left});
    h.links.push_back({i, false});
    return {std::move(h)};
  }

  if (r == "bang_d") {
    if (inst.comp != last) bad("bang_d: acts on the rightmost component");
    if (last_link_unfinished(g)) bad("bang_d: a nesting is still unfinished");
    const Sequent& rm = g.comps[last];
    if (!is_concrete(rm.ant)) bad("bang_d: antecedent is not concrete");
    Lns h = g;
    if (assoc) {
      if (!inst.pos.empty()) bad("bang_d: tree positions do not apply to list contexts");
      FList xs = ctx_to_list(rm.ant);
      int m = static_cast<int>(xs.size()) - 1;
      if (inst.idx != m || m < 0 || xs[m]->conn != Conn::Bang) bad("bang_d: principal is the last element");
      FormulaPtr f = xs[m];
      if (!sig.has(f->name, Axiom::D)) bad("bang_d: D missing from f(" + f->name + ")");
      xs.pop_back();
      h.comps[last] = Sequent{ctx_from_list(xs), rm.succ};
      h.comps.push_back(Sequent{ctx_from_list({f->left}), nullptr});
      h.links.push_back({f->name, false});
      return {std::move(h)};
    }
    CtxPtr c = subtree_at(rm.ant, inst.pos);
    if (c->kind != CtxKind::Leaf || c->formula->conn != Conn::Bang) bad("bang_d: principal formula mismatch");
    const FormulaPtr& f = c->formula;
    if (!sig.has(f->name, Axiom::D)) bad("bang_d: D missing from f(" + f->name + ")");
    h.comps[last] = Sequent{replace_at(rm.ant, inst.pos, ctx_hole(inst.pos)), rm.succ};
    h.comps.push_back(Sequent{fill_hole_by_id(skeleton(rm.ant), inst.pos, f->left), nullptr});
    h.links.push_back({f->name, false});
    return {std::move(h)};
  }

  if (r == "bang_k" || r == "bang_4" || r == "w_move") {
    if (n < 2 || !last_link_unfinished(g)) bad(r + ": needs an unfinished nesting");
    if (inst.comp != n - 2) bad(r + ": moves from the outer active component");
    const std::string& i = g.links.back().label;
    if (inst.labels.size() != 2 || inst.labels[0] != i) bad(r + ": nesting label mismatch");
    const Sequent& outer = g.comps[n - 2];
    const Sequent& inner = g.comps[last];
    Lns h = g;
    if (assoc) {
      if (!inst.pos.empty()) bad(r + ": tree positions do not apply to list contexts");
      FList xs = ctx_to_list(outer.ant);
      int m = static_cast<int>(xs.size()) - 1;
      if (inst.idx != m || m < 0) bad(r + ": only the rightmost formula may move");
      FormulaPtr f = xs[m];
      if (f->conn != Conn::Bang || f->name != inst.labels[1]) bad(r + ": principal formula mismatch");
      const std::string& j = f->name;
      xs.pop_back();
      h.comps[n - 2] = Sequent{ctx_from_list(xs), outer.succ};
      if (r != "w_move") {
        FList ys = ctx_to_list(inner.ant);
        FormulaPtr payload = (r == "bang_k") ? f->left : f;
        if (r == "bang_k" && !sig.leq(i, j)) bad("bang_k: label not in the upset");
        if (r == "bang_4" && !(sig.leq(i, j) && sig.has(j, Axiom::Four)))
          bad("bang_4: label not in the 4-upset");
        ys.insert(ys.begin(), payload);
        h.comps[last] = Sequent{ctx_from_list(ys), inner.succ};
      } else if (!sig.has(j, Axiom::W)) {
        bad("w_move: W missing from f(" + j + ")");
      }
      return {std::move(h)};
    }
    CtxPtr leaf = subtree_at(outer.ant, inst.pos);
    if (leaf->kind != CtxKind::Leaf || leaf->formula->conn != Conn::Bang ||
        leaf->formula->name != inst.labels[1])
      bad(r + ": principal formula mismatch");
    const std::string& j = leaf->formula->name;
    h.comps[n - 2] = Sequent{replace_at(outer.ant, inst.pos, ctx_hole(inst.pos)), outer.succ};
    if (r == "bang_k") {
      if (!sig.leq(i, j)) bad("bang_k: label not in the upset");
      h.comps[last] = Sequent{fill_hole_by_id(inner.ant, inst.pos, leaf->formula->left), inner.succ};
    } else if (r == "bang_4") {
      if (!(sig.leq(i, j) && sig.has(j, Axiom::Four))) bad("bang_4: label not in the 4-upset");
      h.comps[last] = Sequent{fill_hole_by_id(inner.ant, inst.pos, leaf->formula), inner.succ};
    } else {
      if (!sig.has(j, Axiom::W)) bad("w_move: W missing from f(" + j + ")");
      // the matching inner hole stays unfilled and is pruned at release
    }
    return {std::move(h)};
  }

  if (r == "release") {
    if (n < 2 || !last_link_unfinished(g)) bad("release: needs an unfinished nesting");
    if (inst.comp != n - 2 || !inst.pos.empty()) bad("release: discharges the outer active component");
    const Sequent& outer = g.comps[n - 2];
    if (outer.succ) bad("release: outer component still has a succedent");
    if (!is_all_holes(outer.ant)) bad("release: outer component still has formulas");
    Lns h;
    h.comps.assign(g.comps.begin(), g.comps.end() - 2);
    h.links.assign(g.links.begin(), g.links.end() - 1);
    h.comps.push_back(Sequent{prune_holes(g.comps[last].ant), g.comps[last].succ});
    return {std::move(h)};
  }

  bad("unknown rule " + r);
}

bool lns_check_step(const Lns& g, const RuleInst& inst, const std::vector<Lns>& premises,
                    const Signature& sig, LnsMode mode) {
  std::vector<Lns> computed;
  try {
    computed = lns_apply(g, inst, sig, mode);
  } catch (const InvalidInstance&) {
    return false;
  } catch (const UnknownLabel&) {
    return false;
  } catch (const BadPath&) {
    return false;
  } catch (const NotAHole&) {
    return false;
  }
  if (computed.size() != premises.size()) return false;
  for (std::size_t k = 0; k < computed.size(); ++k)
    if (!lns_equal(computed[k], premises[k])) return false;
  return true;
}

bool end_active_check(const Lns& g, const RuleInst& inst) {
  const int n = static_cast<int>(g.comps.size());
  const std::string& r = inst.rule;
  if (r == "bang_k" || r == "bang_4" || r == "w_move" || r == "release") return inst.comp == n - 2;
  if (r == "zeroL") return inst.comp == n - 1 || inst.comp == n - 2;
  return inst.comp == n - 1;
}

}  // namespace sellns
