#include "sellns/context.hpp"

namespace sellns {

std::string path_text(const Path& p) {
  std::string s;
  s.reserve(p.size());
  for (Dir d : p) s += (d == Dir::L ? 'L' : 'R');
  return s;
}

std::optional<Path> path_from_text(const std::string& s) {
  Path p;
  for (char c : s) {
    if (c == 'L')
      p.push_back(Dir::L);
    else if (c == 'R')
      p.push_back(Dir::R);
    else
      return std::nullopt;
  }
  return p;
}

BadPath::BadPath(const Path& p) : std::runtime_error("no subtree at path \"" + path_text(p) + "\"") {}
NotAHole::NotAHole(const Path& p) : std::runtime_error("not a hole at path \"" + path_text(p) + "\"") {}

CtxPtr ctx_empty() {
  static const CtxPtr e = std::make_shared<const ContextTree>(CtxKind::Empty, nullptr, Path{}, nullptr, nullptr);
  return e;
}

CtxPtr ctx_leaf(FormulaPtr f) {
  return std::make_shared<const ContextTree>(CtxKind::Leaf, std::move(f), Path{}, nullptr, nullptr);
}

CtxPtr ctx_hole(Path id) {
  return std::make_shared<const ContextTree>(CtxKind::Hole, nullptr, std::move(id), nullptr, nullptr);
}

CtxPtr ctx_node(CtxPtr l, CtxPtr r) {
  if (l->kind == CtxKind::Empty) return r;
  if (r->kind == CtxKind::Empty) return l;
  return std::make_shared<const ContextTree>(CtxKind::Node, nullptr, Path{}, std::move(l), std::move(r));
}

bool ctx_equal(const CtxPtr& a, const CtxPtr& b) {
  if (a == b) return true;
  if (!a || !b || a->kind != b->kind) return false;
  switch (a->kind) {
    case CtxKind::Empty: return true;
    case CtxKind::Leaf: return formula_equal(a->formula, b->formula);
    case CtxKind::Hole: return a->hole_id == b->hole_id;
    case CtxKind::Node: return ctx_equal(a->left, b->left) && ctx_equal(a->right, b->right);
  }
  return false;
}

bool is_concrete(const CtxPtr& c) {
  switch (c->kind) {
    case CtxKind::Empty:
    case CtxKind::Leaf: return true;
    case CtxKind::Hole: return false;
    case CtxKind::Node: return is_concrete(c->left) && is_concrete(c->right);
  }
  return false;
}

bool is_skeleton(const CtxPtr& c) {
  switch (c->kind) {
    case CtxKind::Empty:
    case CtxKind::Hole: return true;
    case CtxKind::Leaf: return false;
    case CtxKind::Node: return is_skeleton(c->left) && is_skeleton(c->right);
  }
  return false;
}

bool is_all_holes(const CtxPtr& c) { return is_skeleton(c); }

CtxPtr subtree_at(const CtxPtr& c, const Path& p) {
  CtxPtr cur = c;
  for (Dir d : p) {
    if (cur->kind != CtxKind::Node) throw BadPath(p);
    cur = (d == Dir::L) ? cur->left : cur->right;
  }
  return cur;
}

namespace {
CtxPtr replace_rec(const CtxPtr& c, const Path& p, std::size_t at, const CtxPtr& sub, const Path& full) {
  if (at == p.size()) return sub;
  if (c->kind != CtxKind::Node) throw BadPath(full);
  if (p[at] == Dir::L) return ctx_node(replace_rec(c->left, p, at + 1, sub, full), c->right);
  return ctx_node(c->left, replace_rec(c->right, p, at + 1, sub, full));
}
}  // namespace

CtxPtr replace_at(const CtxPtr& c, const Path& p, const CtxPtr& sub) {
  return replace_rec(c, p, 0, sub, p);
}

namespace {
CtxPtr skeleton_rec(const CtxPtr& c, Path& here) {
  switch (c->kind) {
    case CtxKind::Empty: return c;
    case CtxKind::Hole: return c;
    case CtxKind::Leaf: return ctx_hole(here);
    case CtxKind::Node: {
      here.push_back(Dir::L);
      CtxPtr l = skeleton_rec(c->left, here);
      here.back() = Dir::R;
      CtxPtr r = skeleton_rec(c->right, here);
      here.pop_back();
      return std::make_shared<const ContextTree>(CtxKind::Node, nullptr, Path{}, std::move(l), std::move(r));
    }
  }
  return c;
}
}  // namespace

CtxPtr skeleton(const CtxPtr& c) {
  Path root;
  return skeleton_rec(c, root);
}

CtxPtr fill_hole(const CtxPtr& skel, const Path& p, const FormulaPtr& f) {
  CtxPtr target = subtree_at(skel, p);
  if (target->kind != CtxKind::Hole) throw NotAHole(p);
  return replace_at(skel, p, ctx_leaf(f));
}

std::optional<CtxPtr> restrict_upset(const CtxPtr& c, const std::string& i, const Signature& sig) {
  switch (c->kind) {
    case CtxKind::Empty: return c;
    case CtxKind::Hole: return std::nullopt;
    case CtxKind::Leaf: {
      const FormulaPtr& g = c->formula;
      if (g->conn != Conn::Bang) return std::nullopt;
      if (sig.leq(i, g->name)) return c;
      if (sig.has(g->name, Axiom::W)) return ctx_empty();
      return std::nullopt;
    }
    case CtxKind::Node: {
      auto l = restrict_upset(c->left, i, sig);
      if (!l) return std::nullopt;
      auto r = restrict_upset(c->right, i, sig);
      if (!r) return std::nullopt;
      return ctx_node(*l, *r);
    }
  }
  return std::nullopt;
}

CtxPtr prune_holes(const CtxPtr& c) {
  switch (c->kind) {
    case CtxKind::Empty:
    case CtxKind::Leaf: return c;
    case CtxKind::Hole: return ctx_empty();
    case CtxKind::Node: return ctx_node(prune_holes(c->left), prune_holes(c->right));
  }
  return c;
}

namespace {
void leaves_rec(const CtxPtr& c, Path& here, std::vector<LeafRef>& out) {
  switch (c->kind) {
    case CtxKind::Empty: return;
    case CtxKind::Leaf:
    case CtxKind::Hole: out.push_back({here, c}); return;
    case CtxKind::Node:
      here.push_back(Dir::L);
      leaves_rec(c->left, here, out);
      here.back() = Dir::R;
      leaves_rec(c->right, here, out);
      here.pop_back();
      return;
  }
}
}  // namespace

std::vector<LeafRef> leaves(const CtxPtr& c) {
  std::vector<LeafRef> out;
  Path here;
  leaves_rec(c, here, out);
  return out;
}

std::vector<LeafRef> formula_leaves(const CtxPtr& c) {
  std::vector<LeafRef> out;
  for (auto& lr : leaves(c))
    if (lr.leaf->kind == CtxKind::Leaf) out.push_back(lr);
  return out;
}

std::vector<LeafRef> hole_leaves(const CtxPtr& c) {
  std::vector<LeafRef> out;
  for (auto& lr : leaves(c))
    if (lr.leaf->kind == CtxKind::Hole) out.push_back(lr);
  return out;
}

std::optional<Path> find_hole(const CtxPtr& c, const Path& id) {
  for (auto& lr : hole_leaves(c))
    if (lr.leaf->hole_id == id) return lr.path;
  return std::nullopt;
}

CtxPtr fill_hole_by_id(const CtxPtr& c, const Path& id, const FormulaPtr& f) {
  auto p = find_hole(c, id);
  if (!p) throw NotAHole(id);
  return replace_at(c, *p, ctx_leaf(f));
}

std::optional<std::string> uniform_bang_label(const CtxPtr& c) {
  auto fls = formula_leaves(c);
  if (fls.empty() || fls.size() != leaves(c).size()) return std::nullopt;
  std::string label;
  for (auto& lr : fls) {
    if (lr.leaf->formula->conn != Conn::Bang) return std::nullopt;
    if (label.empty())
      label = lr.leaf->formula->name;
    else if (label != lr.leaf->formula->name)
      return std::nullopt;
  }
  return label;
}

std::vector<Rewrite> structural_rewrites(const CtxPtr& c, const Signature& sig) {
  std::vector<Rewrite> out;
  // Leaf rules first: W deletes, C copies.
  for (auto& lr : formula_leaves(c)) {
    const FormulaPtr& g = lr.leaf->formula;
    if (g->conn != Conn::Bang) continue;
    const std::string& label = g->name;
    if (!sig.has_label(label)) continue;
    if (sig.has(label, Axiom::W)) out.push_back({"W", lr.path, label, replace_at(c, lr.path, ctx_empty())});
    if (sig.has(label, Axiom::C))
      out.push_back({"C", lr.path, label, replace_at(c, lr.path, ctx_node(lr.leaf, lr.leaf))});
  }
  // Node rules: exchange and (re)association, both orientations.
  struct NodeRef {
    Path path;
    CtxPtr node;
  };
  std::vector<NodeRef> nodes;
  {
    // pre-order collection
    std::vector<NodeRef> stack{{Path{}, c}};
    while (!stack.empty()) {
      NodeRef cur = stack.back();
      stack.pop_back();
      if (cur.node->kind != CtxKind::Node) continue;
      nodes.push_back(cur);
      Path pl = cur.path, pr = cur.path;
      pl.push_back(Dir::L);
      pr.push_back(Dir::R);
      stack.push_back({pr, cur.node->right});
      stack.push_back({pl, cur.node->left});
    }
  }
  auto exchangeable = [&](const CtxPtr& t) -> std::optional<std::string> {
    auto e = uniform_bang_label(t);
    if (e && sig.has_label(*e) && sig.has(*e, Axiom::E)) return e;
    return std::nullopt;
  };
  auto assoc_label = [&](const CtxPtr& t, Axiom a) -> std::optional<std::string> {
    auto e = uniform_bang_label(t);
    if (e && sig.has_label(*e) && sig.has(*e, a)) return e;
    return std::nullopt;
  };
  for (auto& nr : nodes) {
    const CtxPtr& l = nr.node->left;
    const CtxPtr& r = nr.node->right;
    CtxPtr swapped = ctx_node(r, l);
    if (auto e = exchangeable(l)) out.push_back({"E1", nr.path, *e, replace_at(c, nr.path, swapped)});
    if (auto e = exchangeable(r)) out.push_back({"E2", nr.path, *e, replace_at(c, nr.path, swapped)});
    // A1: (Δ,(Δ2,Δ3)) -> ((Δ,Δ2),Δ3) with Δ all-Bang(i,·), A1 ∈ f(i)
    if (r->kind == CtxKind::Node) {
      if (auto i = assoc_label(l, Axiom::A1)) {
        CtxPtr res = ctx_node(ctx_node(l, r->left), r->right);
        out.push_back({"A1", nr.path, *i, replace_at(c, nr.path, res)});
      }
      // A2inv: (Δ1,(Δ2,Δ)) -> ((Δ1,Δ2),Δ) with Δ rightmost all-Bang(i,·), A2 ∈ f(i)
      if (auto i = assoc_label(r->right, Axiom::A2)) {
        CtxPtr res = ctx_node(ctx_node(l, r->left), r->right);
        out.push_back({"A2inv", nr.path, *i, replace_at(c, nr.path, res)});
      }
    }
    if (l->kind == CtxKind::Node) {
      // A1inv: ((Δ,Δ2),Δ3) -> (Δ,(Δ2,Δ3))
      if (auto i = assoc_label(l->left, Axiom::A1)) {
        CtxPtr res = ctx_node(l->left, ctx_node(l->right, r));
        out.push_back({"A1inv", nr.path, *i, replace_at(c, nr.path, res)});
      }
      // A2: ((Δ1,Δ2),Δ) -> (Δ1,(Δ2,Δ))
      if (auto i = assoc_label(r, Axiom::A2)) {
        CtxPtr res = ctx_node(l->left, ctx_node(l->right, r));
        out.push_back({"A2", nr.path, *i, replace_at(c, nr.path, res)});
      }
    }
  }
  return out;
}

std::optional<CtxPtr> apply_structural_rewrite(const CtxPtr& c, const std::string& rule, const Path& pos,
                                               const std::string& label, const Signature& sig) {
  if (!sig.has_label(label)) return std::nullopt;
  CtxPtr target;
  try {
    target = subtree_at(c, pos);
  } catch (const BadPath&) {
    return std::nullopt;
  }
  auto uniform = [&](const CtxPtr& t, Axiom a) {
    auto e = uniform_bang_label(t);
    return e && *e == label && sig.has(label, a);
  };
  if (rule == "W" || rule == "C") {
    if (target->kind != CtxKind::Leaf || target->formula->conn != Conn::Bang ||
        target->formula->name != label)
      return std::nullopt;
    if (rule == "W")
      return sig.has(label, Axiom::W) ? std::optional(replace_at(c, pos, ctx_empty())) : std::nullopt;
    return sig.has(label, Axiom::C) ? std::optional(replace_at(c, pos, ctx_node(target, target)))
                                    : std::nullopt;
  }
  if (target->kind != CtxKind::Node) return std::nullopt;
  const CtxPtr& l = target->left;
  const CtxPtr& r = target->right;
  if (rule == "E1")
    return uniform(l, Axiom::E) ? std::optional(replace_at(c, pos, ctx_node(r, l))) : std::nullopt;
  if (rule == "E2")
    return uniform(r, Axiom::E) ? std::optional(replace_at(c, pos, ctx_node(r, l))) : std::nullopt;
  if (rule == "A1") {
    if (r->kind != CtxKind::Node || !uniform(l, Axiom::A1)) return std::nullopt;
    return replace_at(c, pos, ctx_node(ctx_node(l, r->left), r->right));
  }
  if (rule == "A2inv") {
    if (r->kind != CtxKind::Node || !uniform(r->right, Axiom::A2)) return std::nullopt;
    return replace_at(c, pos, ctx_node(ctx_node(l, r->left), r->right));
  }
  if (rule == "A1inv") {
    if (l->kind != CtxKind::Node || !uniform(l->left, Axiom::A1)) return std::nullopt;
    return replace_at(c, pos, ctx_node(l->left, ctx_node(l->right, r)));
  }
  if (rule == "A2") {
    if (l->kind != CtxKind::Node || !uniform(r, Axiom::A2)) return std::nullopt;
    return replace_at(c, pos, ctx_node(l->left, ctx_node(l->right, r)));
  }
  return std::nullopt;
}

void collect_labels(const CtxPtr& c, std::set<std::string>& out) {
  switch (c->kind) {
    case CtxKind::Empty:
    case CtxKind::Hole: return;
    case CtxKind::Leaf: collect_labels(c->formula, out); return;
    case CtxKind::Node:
      collect_labels(c->left, out);
      collect_labels(c->right, out);
      return;
  }
}

std::vector<FormulaPtr> ctx_to_list(const CtxPtr& c) {
  std::vector<FormulaPtr> out;
  for (auto& lr : formula_leaves(c)) out.push_back(lr.leaf->formula);
  return out;
}

CtxPtr ctx_from_list(const std::vector<FormulaPtr>& fs) {
  CtxPtr acc = ctx_empty();
  for (auto it = fs.rbegin(); it != fs.rend(); ++it) acc = ctx_node(ctx_leaf(*it), acc);
  return acc;
}

CtxPtr flatten(const CtxPtr& c) { return ctx_from_list(ctx_to_list(c)); }

}  // namespace sellns
