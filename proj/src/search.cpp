#include "sellns/search.hpp"

#include <algorithm>
#include <map>

#include "sellns/parser.hpp"

namespace sellns {

const char* system_name(SystemKind s) {
  switch (s) {
    case SystemKind::Sell: return "sell";
    case SystemKind::LnsAssoc: return "lns-assoc";
    case SystemKind::LnsNonAssoc: return "lns-nonassoc";
  }
  return "?";
}

std::optional<SystemKind> system_from_name(const std::string& name) {
  if (name == "sell") return SystemKind::Sell;
  if (name == "lns-assoc") return SystemKind::LnsAssoc;
  if (name == "lns-nonassoc") return SystemKind::LnsNonAssoc;
  return std::nullopt;
}

const char* outcome_name(Outcome o) {
  switch (o) {
    case Outcome::Proved: return "proved";
    case Outcome::ExhaustedUnprovable: return "unprovable";
    case Outcome::BoundReached: return "bound";
  }
  return "?";
}

namespace {

template <typename State, typename Adapter>
class Dfs {
public:
  Dfs(const Adapter& ad, const SearchBudget& budget, std::uint64_t& nodes)
      : ad_(ad), budget_(budget), nodes_(nodes) {}

  bool cut = false;  // a branch died on a bound rather than on dead ends

  std::optional<CertNode> go(const State& s, int depth) {
    if (budget_.cancel && budget_.cancel->load()) {
      cut = true;
      return std::nullopt;
    }
    if (++nodes_ > budget_.max_nodes) {
      cut = true;
      return std::nullopt;
    }
    if (depth == 0) {
      if (ad_.any_applicable(s)) cut = true;
      return std::nullopt;
    }
    std::vector<RuleInst> insts = ad_.applicable(s);
    std::string key = ad_.key(s);
    std::set<std::string> premise_sets_tried;
    for (const RuleInst& inst : insts) {
      std::vector<State> premises = ad_.apply(s, inst);
      std::vector<std::string> premise_keys;
      premise_keys.reserve(premises.size());
      std::string combined;
      for (const State& p : premises) {
        premise_keys.push_back(ad_.key(p));
        combined += premise_keys.back();
        combined += '\n';
      }
      // distinct rules that generate identical premises prove the same thing
      if (!premise_sets_tried.insert(combined).second) continue;
      if (budget_.loop_check) {
        bool looped = false;
        for (const std::string& pk : premise_keys) {
          if (pk == key || std::find(path_.begin(), path_.end(), pk) != path_.end()) {
            looped = true;
            break;
          }
        }
        if (looped) continue;  // a loop-free proof exists whenever any does
      }
      path_.push_back(key);
      std::vector<CertNode> kids;
      bool all = true;
      for (const State& p : premises) {
        auto sub = go(p, depth - 1);
        if (!sub) {
          all = false;
          break;
        }
        kids.push_back(std::move(*sub));
      }
      path_.pop_back();
      if (all) return CertNode{inst, ad_.print(s), std::move(kids)};
    }
    return std::nullopt;
  }

private:
  const Adapter& ad_;
  const SearchBudget& budget_;
  std::uint64_t& nodes_;
  std::vector<std::string> path_;
};

struct SellAdapter {
  const Signature& sig;
  std::vector<RuleInst> applicable(const Sequent& s) const { return sellns::applicable(s, sig); }
  bool any_applicable(const Sequent& s) const { return sellns::has_applicable(s, sig); }
  std::vector<Sequent> apply(const Sequent& s, const RuleInst& inst) const {
    return apply_rule(s, inst, sig);
  }
  std::string key(const Sequent& s) const {
    std::string out;
    out.reserve(64);
    state_key(out, s);
    return out;
  }
  std::string print(const Sequent& s) const { return print_sequent(s); }
};

struct LnsAdapter {
  const Signature& sig;
  LnsMode mode;
  std::vector<RuleInst> applicable(const Lns& g) const { return lns_applicable(g, sig, mode); }
  bool any_applicable(const Lns& g) const { return !lns_applicable(g, sig, mode).empty(); }
  std::vector<Lns> apply(const Lns& g, const RuleInst& inst) const {
    return lns_apply(g, inst, sig, mode);
  }
  std::string key(const Lns& g) const {
    std::string out;
    out.reserve(96);
    state_key(out, g);
    return out;
  }
  std::string print(const Lns& g) const { return print_lns(g); }
};

void require_valid(const Signature& sig) {
  if (!sig.valid()) throw IllFormedGoal("signature is invalid; run validation for details");
}

void require_budget(const SearchBudget& budget) {
  if (budget.max_depth <= 0 || budget.max_nodes == 0)
    throw std::invalid_argument("search bounds must be positive");
}

void check_goal_formula(const FormulaPtr& f, const Signature& sig) {
  if (contains_par(f)) throw IllFormedGoal("the par connective belongs to the display language only");
  std::set<std::string> labels;
  collect_labels(f, labels);
  for (const auto& l : labels)
    if (!sig.has_label(l)) throw IllFormedGoal("label '" + l + "' is not in the signature");
}

void check_goal_sequent(const Sequent& s, const Signature& sig, bool succ_required) {
  if (!is_concrete(s.ant)) throw IllFormedGoal("goal contexts must be concrete");
  if (succ_required && !s.succ) throw IllFormedGoal("the goal needs a succedent");
  for (auto& lr : formula_leaves(s.ant)) check_goal_formula(lr.leaf->formula, sig);
  if (s.succ) check_goal_formula(s.succ, sig);
}

template <typename State, typename Adapter>
SearchResult deepening(const State& goal, const Adapter& ad, SystemKind system, const Signature& sig,
                       const SearchBudget& budget) {
  SearchResult result;
  for (int depth = 1; depth <= budget.max_depth; ++depth) {
    Dfs<State, Adapter> dfs(ad, budget, result.nodes);
    auto proof = dfs.go(goal, depth);
    if (proof) {
      result.outcome = Outcome::Proved;
      result.certificate = Certificate{system, sig.fingerprint(), std::move(*proof)};
      return result;
    }
    if (!dfs.cut) {
      // fully explored without hitting any bound: deeper rounds cannot differ
      result.outcome = Outcome::ExhaustedUnprovable;
      return result;
    }
    if (result.nodes > budget.max_nodes) break;
  }
  result.outcome = Outcome::BoundReached;
  return result;
}

}  // namespace

SearchResult prove_sell(const Sequent& goal, const Signature& sig, const SearchBudget& budget) {
  require_valid(sig);
  require_budget(budget);
  check_goal_sequent(goal, sig, true);
  SellAdapter ad{sig};
  return deepening(goal, ad, SystemKind::Sell, sig, budget);
}

SearchResult prove_lns(const Lns& goal, const Signature& sig, LnsMode mode, const SearchBudget& budget) {
  require_valid(sig);
  require_budget(budget);
  for (std::size_t k = 0; k < goal.comps.size(); ++k)
    check_goal_sequent(goal.comps[k], sig, k + 1 == goal.comps.size());
  for (std::size_t k = 0; k < goal.links.size(); ++k) {
    if (!sig.has_label(goal.links[k].label))
      throw IllFormedGoal("link label '" + goal.links[k].label + "' is not in the signature");
    if (!goal.links[k].finished && k + 1 != goal.links.size())
      throw IllFormedGoal("only the final link may be unfinished");
  }
  LnsAdapter ad{sig, mode};
  SystemKind system = mode == LnsMode::Associative ? SystemKind::LnsAssoc : SystemKind::LnsNonAssoc;
  return deepening(goal, ad, system, sig, budget);
}

SearchResult prove(SystemKind system, const Lns& goal, const Signature& sig, const SearchBudget& budget) {
  if (system == SystemKind::Sell) {
    if (goal.comps.size() != 1) throw IllFormedGoal("the plain calculus takes single-component goals");
    return prove_sell(goal.comps[0], sig, budget);
  }
  return prove_lns(goal, sig,
                   system == SystemKind::LnsAssoc ? LnsMode::Associative : LnsMode::NonAssociative,
                   budget);
}

namespace {

struct Rejection {
  std::string reason;
  std::vector<int> node_path;
};

template <typename State, typename ParseFn, typename ApplyFn, typename EqFn>
std::optional<Rejection> walk_cert(const CertNode& node, std::vector<int>& path, const ParseFn& parse,
                                   const ApplyFn& apply, const EqFn& eq) {
  std::optional<State> conclusion;
  try {
    conclusion = parse(node.conclusion);
  } catch (const ParseError& e) {
    return Rejection{std::string("conclusion does not parse: ") + e.what(), path};
  }
  std::vector<State> computed;
  try {
    computed = apply(*conclusion, node.inst);
  } catch (const std::exception& e) {
    return Rejection{e.what(), path};
  }
  if (computed.size() != node.premises.size())
    return Rejection{"instance yields " + std::to_string(computed.size()) + " premises, certificate records " +
                         std::to_string(node.premises.size()),
                     path};
  for (std::size_t k = 0; k < computed.size(); ++k) {
    std::optional<State> recorded;
    try {
      recorded = parse(node.premises[k].conclusion);
    } catch (const ParseError& e) {
      path.push_back(static_cast<int>(k));
      Rejection r{std::string("conclusion does not parse: ") + e.what(), path};
      path.pop_back();
      return r;
    }
    if (!eq(computed[k], *recorded)) {
      path.push_back(static_cast<int>(k));
      Rejection r{"premise " + std::to_string(k) + " differs from the recorded conclusion", path};
      path.pop_back();
      return r;
    }
    path.push_back(static_cast<int>(k));
    auto sub = walk_cert<State>(node.premises[k], path, parse, apply, eq);
    path.pop_back();
    if (sub) return sub;
  }
  return std::nullopt;
}

}  // namespace

Verdict check_certificate(const Certificate& cert, const Signature& sig) {
  std::vector<int> path;
  std::optional<Rejection> rej;
  if (cert.system == SystemKind::Sell) {
    auto parse = [](const std::string& text) {
      Sequent s = parse_sequent_internal(text);
      if (!s.succ) throw ParseError("acLL sequents need a succedent", 1, 1);
      return s;
    };
    auto apply = [&](const Sequent& s, const RuleInst& inst) { return apply_rule(s, inst, sig); };
    rej = walk_cert<Sequent>(cert.root, path, parse, apply, sequent_equal);
  } else {
    LnsMode mode = cert.system == SystemKind::LnsAssoc ? LnsMode::Associative : LnsMode::NonAssociative;
    auto parse = [](const std::string& text) { return parse_lns_internal(text); };
    auto apply = [&](const Lns& g, const RuleInst& inst) { return lns_apply(g, inst, sig, mode); };
    rej = walk_cert<Lns>(cert.root, path, parse, apply, lns_equal);
  }
  if (rej) return {false, rej->reason, rej->node_path};
  if (cert.sig_fingerprint != sig.fingerprint())
    return {false, "signature fingerprint mismatch", {}};
  return {true, "", {}};
}

// ---- oracle ----------------------------------------------------------------

namespace {

void oracle_check_formula(const FormulaPtr& f) {
  if (formula_size(f) > 7) throw FragmentViolation("formula size exceeds 7");
  switch (f->conn) {
    case Conn::Atom:
    case Conn::One: return;
    case Conn::Tensor:
    case Conn::Under:
    case Conn::Over:
      oracle_check_formula(f->left);
      oracle_check_formula(f->right);
      return;
    default: throw FragmentViolation("only atoms, 1, *, \\ and / are decidable here");
  }
}

class Oracle {
public:
  bool decide(const Sequent& s) {
    std::string key = print_sequent(s);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    bool value = compute(s);
    memo_.emplace(std::move(key), value);
    return value;
  }

private:
  std::map<std::string, bool> memo_;

  // Direct structural recursion over the sequent; every step shrinks the
  // total connective count, so plain recursion terminates.
  bool compute(const Sequent& s) {
    const CtxPtr& a = s.ant;
    const FormulaPtr& f = s.succ;
    if (a->kind == CtxKind::Leaf && a->formula->conn == Conn::Atom && f->conn == Conn::Atom &&
        a->formula->name == f->name)
      return true;
    if (a->kind == CtxKind::Empty && f->conn == Conn::One) return true;
    if (f->conn == Conn::Under && decide({ctx_node(ctx_leaf(f->left), a), f->right})) return true;
    if (f->conn == Conn::Over && decide({ctx_node(a, ctx_leaf(f->right)), f->left})) return true;
    if (f->conn == Conn::Tensor && a->kind == CtxKind::Node && decide({a->left, f->left}) &&
        decide({a->right, f->right}))
      return true;
    for (auto& lr : formula_leaves(a)) {
      const FormulaPtr& g = lr.leaf->formula;
      if (g->conn == Conn::One && decide({replace_at(a, lr.path, ctx_empty()), f})) return true;
      if (g->conn == Conn::Tensor &&
          decide({replace_at(a, lr.path, ctx_node(ctx_leaf(g->left), ctx_leaf(g->right))), f}))
        return true;
    }
    // residual left rules need the node around the implication leaf
    std::vector<std::pair<Path, CtxPtr>> nodes;
    collect_nodes(a, {}, nodes);
    for (auto& [p, node] : nodes) {
      if (node->right->kind == CtxKind::Leaf && node->right->formula->conn == Conn::Under) {
        const FormulaPtr& imp = node->right->formula;
        if (decide({node->left, imp->left}) && decide({replace_at(a, p, ctx_leaf(imp->right)), f}))
          return true;
      }
      if (node->left->kind == CtxKind::Leaf && node->left->formula->conn == Conn::Over) {
        const FormulaPtr& imp = node->left->formula;
        if (decide({node->right, imp->right}) && decide({replace_at(a, p, ctx_leaf(imp->left)), f}))
          return true;
      }
    }
    return false;
  }

  static void collect_nodes(const CtxPtr& c, Path here, std::vector<std::pair<Path, CtxPtr>>& out) {
    if (c->kind != CtxKind::Node) return;
    out.emplace_back(here, c);
    Path l = here, r = here;
    l.push_back(Dir::L);
    r.push_back(Dir::R);
    collect_nodes(c->left, std::move(l), out);
    collect_nodes(c->right, std::move(r), out);
  }
};

}  // namespace

bool oracle_provable(const Sequent& seq, const Signature&) {
  if (!seq.succ) throw FragmentViolation("sequent without a succedent");
  if (!is_concrete(seq.ant)) throw FragmentViolation("context contains holes");
  for (auto& lr : formula_leaves(seq.ant)) oracle_check_formula(lr.leaf->formula);
  oracle_check_formula(seq.succ);
  Oracle oracle;
  return oracle.decide(seq);
}

Sequent axiom_instance(Axiom a, const std::string& i) {
  FormulaPtr p = atom("p"), q = atom("q"), r = atom("r");
  switch (a) {
    case Axiom::C:  // !ip |- !ip * !ip
      return {ctx_leaf(bang(i, p)), tensor(bang(i, p), bang(i, p))};
    case Axiom::W:  // (p, !iq) |- p
      return {ctx_node(ctx_leaf(p), ctx_leaf(bang(i, q))), p};
    case Axiom::E:  // (!ip, q) |- q * !ip
      return {ctx_node(ctx_leaf(bang(i, p)), ctx_leaf(q)), tensor(q, bang(i, p))};
    case Axiom::A1:  // (!ip, (q, r)) |- (!ip * q) * r
      return {ctx_node(ctx_leaf(bang(i, p)), ctx_node(ctx_leaf(q), ctx_leaf(r))),
              tensor(tensor(bang(i, p), q), r)};
    case Axiom::A2:  // ((q, r), !ip) |- q * (r * !ip)
      return {ctx_node(ctx_node(ctx_leaf(q), ctx_leaf(r)), ctx_leaf(bang(i, p))),
              tensor(q, tensor(r, bang(i, p)))};
    case Axiom::K:  // (!ip, ![i](p \ q)) |- !iq, the curried axiom !i(p\q) \ (!ip \ !iq)
      return {ctx_node(ctx_leaf(bang(i, p)), ctx_leaf(bang(i, under(p, q)))), bang(i, q)};
    case Axiom::T:  // !ip |- p
      return {ctx_leaf(bang(i, p)), p};
    case Axiom::Four:  // !ip |- !i!ip
      return {ctx_leaf(bang(i, p)), bang(i, bang(i, p))};
    case Axiom::D:  // !i0 |- 1
      return {ctx_leaf(bang(i, zero())), one()};
  }
  throw std::invalid_argument("unknown axiom");
}

}  // namespace sellns
