#include <doctest.h>

#include "sellns/lnscalc.hpp"
#include "sellns/search.hpp"
#include "test_util.hpp"

using namespace sellns;
using namespace testutil;

namespace {

Signature functorial(std::set<Axiom> extra = {}, SigMode mode = SigMode::Functorial) {
  extra.insert(Axiom::K);
  if (mode == SigMode::AssociativeFunctorial) {
    extra.insert(Axiom::A1);
    extra.insert(Axiom::A2);
  }
  return Signature::make({"a", "b"}, {{"a", "b"}}, {{"a", extra}, {"b", extra}}, mode);
}

RuleInst find_rule(const std::vector<RuleInst>& insts, const std::string& rule) {
  for (auto& inst : insts)
    if (inst.rule == rule) return inst;
  throw std::runtime_error("no instance of " + rule);
}

bool has_rule(const std::vector<RuleInst>& insts, const std::string& rule) {
  for (auto& inst : insts)
    if (inst.rule == rule) return true;
  return false;
}

}  // namespace

TEST_CASE("interpret: single components and nestings") {
  CHECK(print_formula(interpret(parse_lns("a |- b"))) == "a \\ b");
  CHECK(print_formula(interpret(parse_lns("() |- f"))) == "1 \\ f");
  CHECK(print_formula(interpret(parse_lns("a |- b //[i] c |- d"))) == "(a \\ b) | ![i](c \\ d)");
  // unfinished links interpret identically
  CHECK(print_formula(interpret(parse_lns("a |- b //^[i] c |- d"))) == "(a \\ b) | ![i](c \\ d)");
  // the big tensor multiplies along the tree shape
  CHECK(print_formula(interpret(parse_lns("(a, (b, c)) |- d"))) == "a * (b * c) \\ d");
}

TEST_CASE("interpret: missing succedent") {
  CHECK_THROWS_AS(interpret(parse_lns("a |- //^[i] b |- c")), MissingSuccedent);
}

TEST_CASE("interpret: single components never contain par") {
  FormulaGen gen(8899, {"p", "q"}, {"i"});
  for (int round = 0; round < 100; ++round) {
    Lns g = single_component({gen.gen_ctx(4, 4), gen.gen(5)});
    CHECK_FALSE(contains_par(interpret(g)));
  }
}

TEST_CASE("lns rules: the pre-order law derivation, step by step") {
  Signature sig = functorial();
  LnsMode mode = LnsMode::NonAssociative;
  Lns goal = parse_lns("![b]p |- ![a]p");

  auto insts = lns_applicable(goal, sig, mode);
  RuleInst promote = find_rule(insts, "bang");
  CHECK(promote.labels == std::vector<std::string>{"a"});
  auto after_promote = lns_apply(goal, promote, sig, mode);
  REQUIRE(after_promote.size() == 1);
  CHECK(print_lns(after_promote[0]) == "![b]p |- //^[a] {} |- p");

  auto insts2 = lns_applicable(after_promote[0], sig, mode);
  RuleInst kmove = find_rule(insts2, "bang_k");
  CHECK(kmove.labels == std::vector<std::string>{"a", "b"});
  auto after_k = lns_apply(after_promote[0], kmove, sig, mode);
  REQUIRE(after_k.size() == 1);
  CHECK(print_lns(after_k[0]) == "{} |- //^[a] p |- p");

  RuleInst release = find_rule(lns_applicable(after_k[0], sig, mode), "release");
  auto after_release = lns_apply(after_k[0], release, sig, mode);
  REQUIRE(after_release.size() == 1);
  CHECK(print_lns(after_release[0]) == "p |- p");

  RuleInst init = find_rule(lns_applicable(after_release[0], sig, mode), "init");
  CHECK(lns_apply(after_release[0], init, sig, mode).empty());
}

TEST_CASE("lns rules: the empty-component gate blocks release") {
  // outer succedent still present: not an empty component, release must not fire
  Lns stuck;
  stuck.comps.push_back(parse_sequent_internal("() |- 1"));
  stuck.comps.push_back(parse_sequent_internal("({}, {}) |- f"));
  stuck.links.push_back({"i", false});
  Signature sig = Signature::make({"i"}, {}, {{"i", {Axiom::K}}}, SigMode::Functorial);
  CHECK_FALSE(has_rule(lns_applicable(stuck, sig, LnsMode::NonAssociative), "release"));

  // with the succedent consumed it fires and prunes the leftover holes
  Lns ready = stuck;
  ready.comps[0].succ = nullptr;
  ready.comps[1] = parse_sequent_internal("(a, {}) |- f");
  auto insts = lns_applicable(ready, sig, LnsMode::NonAssociative);
  REQUIRE(has_rule(insts, "release"));
  auto out = lns_apply(ready, find_rule(insts, "release"), sig, LnsMode::NonAssociative);
  CHECK(print_lns(out[0]) == "a |- f");
}

TEST_CASE("lns rules: promotion is blocked while a nesting is unfinished") {
  Signature sig = functorial();
  Lns goal = parse_lns("![a]p |- ![a](![a]p)");
  LnsMode mode = LnsMode::NonAssociative;
  auto step1 = lns_apply(goal, find_rule(lns_applicable(goal, sig, mode), "bang"), sig, mode);
  // inner succedent is banged, but the link is still unfinished
  CHECK_FALSE(has_rule(lns_applicable(step1[0], sig, mode), "bang"));
}

TEST_CASE("lns rules: instances only touch the two rightmost components") {
  Signature sig = functorial();
  Lns g = parse_lns_internal("![a]p |- q //[a] ![b]r |- s //^[b] {} |- t");
  auto insts = lns_applicable(g, sig, LnsMode::NonAssociative);
  REQUIRE(!insts.empty());
  for (auto& inst : insts) {
    CHECK(end_active_check(g, inst));
    CHECK(inst.comp >= 1);
  }
  RuleInst fake;
  fake.rule = "bang_t";
  fake.comp = 0;
  fake.pos = {};
  CHECK_FALSE(end_active_check(g, fake));
}

TEST_CASE("modal rules: k, 4, t, d behave per feature") {
  LnsMode mode = LnsMode::NonAssociative;
  SUBCASE("bang_4 moves the banged formula as a whole") {
    Signature sig = functorial({Axiom::Four});
    Lns goal = parse_lns("![b]p |- ![a]q");
    auto nested = lns_apply(goal, find_rule(lns_applicable(goal, sig, mode), "bang"), sig, mode)[0];
    auto insts = lns_applicable(nested, sig, mode);
    CHECK(has_rule(insts, "bang_k"));
    REQUIRE(has_rule(insts, "bang_4"));
    auto moved = lns_apply(nested, find_rule(insts, "bang_4"), sig, mode);
    CHECK(print_lns(moved[0]) == "{} |- //^[a] ![b]p |- q");
  }
  SUBCASE("bang_4 needs 4 in the feature set") {
    Signature sig = functorial();
    Lns goal = parse_lns("![b]p |- ![a]q");
    auto nested = lns_apply(goal, find_rule(lns_applicable(goal, sig, mode), "bang"), sig, mode)[0];
    CHECK_FALSE(has_rule(lns_applicable(nested, sig, mode), "bang_4"));
  }
  SUBCASE("bang_t derelicts in place when T is present") {
    Signature sig = functorial({Axiom::T});
    Lns goal = parse_lns("![a]p |- p");
    auto insts = lns_applicable(goal, sig, mode);
    REQUIRE(has_rule(insts, "bang_t"));
    CHECK(print_lns(lns_apply(goal, find_rule(insts, "bang_t"), sig, mode)[0]) == "p |- p");
    CHECK_FALSE(has_rule(lns_applicable(goal, functorial(), mode), "bang_t"));
  }
  SUBCASE("bang_d opens a succedent-free nesting") {
    Signature sig = functorial({Axiom::D});
    Lns goal = parse_lns("![a]0 |- 1");
    auto insts = lns_applicable(goal, sig, mode);
    REQUIRE(has_rule(insts, "bang_d"));
    auto nested = lns_apply(goal, find_rule(insts, "bang_d"), sig, mode);
    CHECK(print_lns(nested[0]) == "{} |- 1 //^[a] 0 |-");
    // 0L closes the whole LNS from the rightmost component
    auto closing = lns_applicable(nested[0], sig, mode);
    REQUIRE(has_rule(closing, "zeroL"));
    CHECK(lns_apply(nested[0], find_rule(closing, "zeroL"), sig, mode).empty());
    // the outer component keeps its succedent, so release never fires
    CHECK_FALSE(has_rule(closing, "release"));
  }
}

TEST_CASE("associative mode: lists migrate right to left, order preserved") {
  Signature sig = functorial({}, SigMode::AssociativeFunctorial);
  LnsMode mode = LnsMode::Associative;
  Lns goal = parse_lns("(![a]p, ![a]q) |- ![a](p * q)");
  auto nested = lns_apply(goal, find_rule(lns_applicable(goal, sig, mode), "bang"), sig, mode)[0];
  CHECK(print_lns(nested) == "(![a]p, ![a]q) |- //^[a] () |- p * q");

  // only the rightmost formula may move
  auto insts = lns_applicable(nested, sig, mode);
  std::vector<RuleInst> moves;
  for (auto& inst : insts)
    if (inst.rule == "bang_k") moves.push_back(inst);
  REQUIRE(moves.size() == 1);
  CHECK(moves[0].idx == 1);
  auto moved = lns_apply(nested, moves[0], sig, mode)[0];
  CHECK(print_lns(moved) == "![a]p |- //^[a] q |- p * q");
  auto moved2 =
      lns_apply(moved, find_rule(lns_applicable(moved, sig, mode), "bang_k"), sig, mode)[0];
  CHECK(print_lns(moved2) == "() |- //^[a] (p, q) |- p * q");
  auto released =
      lns_apply(moved2, find_rule(lns_applicable(moved2, sig, mode), "release"), sig, mode)[0];
  CHECK(print_lns(released) == "(p, q) |- p * q");

  // associative tensorR may split anywhere, including empty parts
  auto splits = lns_applicable(released, sig, mode);
  int tensor_splits = 0;
  for (auto& inst : splits)
    if (inst.rule == "tensorR") ++tensor_splits;
  CHECK(tensor_splits == 3);
}

TEST_CASE("the K axiom curries with its argument on the left") {
  // !i(p\q) \ (!ip \ (!iq)) decomposes, via the right rule for \ twice, to
  // (!ip, !i(p\q)) |- !iq. With the implication on the wrong side no
  // functorial signature proves it: there is no exchange to repair the order.
  Signature sig = Signature::make({"i"}, {}, {{"i", {Axiom::K}}}, SigMode::Functorial);
  SearchBudget budget;
  budget.max_depth = 12;
  Sequent curried = parse_sequent("() |- ![i](p \\ q) \\ (![i]p \\ ![i]q)");
  Sequent good = parse_sequent("(![i]p, ![i](p \\ q)) |- ![i]q");
  Sequent flipped = parse_sequent("(![i](p \\ q), ![i]p) |- ![i]q");
  CHECK(prove_lns(single_component(curried), sig, LnsMode::NonAssociative, budget).outcome ==
        Outcome::Proved);
  CHECK(prove_lns(single_component(good), sig, LnsMode::NonAssociative, budget).outcome ==
        Outcome::Proved);
  CHECK(prove_lns(single_component(flipped), sig, LnsMode::NonAssociative, budget).outcome ==
        Outcome::ExhaustedUnprovable);
}

TEST_CASE("associative mode: mode mismatch is reported") {
  Signature plain = sig_ex1();
  CHECK_THROWS_AS(lns_applicable(parse_lns("p |- q"), plain, LnsMode::Associative), ModeMismatch);
  CHECK_THROWS_AS(lns_applicable(parse_lns("p |- q"), plain, LnsMode::NonAssociative), ModeMismatch);
}

TEST_CASE("hole bookkeeping: inner holes mirror the outer leaves not yet moved") {
  Signature sig = Signature::make(
      {"i", "j", "k"}, {{"i", "j"}},
      {{"i", {Axiom::K}}, {"j", {Axiom::K, Axiom::Four}}, {"k", {Axiom::K, Axiom::W}}},
      SigMode::Functorial);
  REQUIRE(sig.valid());
  LnsMode mode = LnsMode::NonAssociative;
  Lns goal = parse_lns("(![i]a, (![j]b, ![k]c)) |- ![i](a * b)");
  auto frontier = lns_apply(goal, find_rule(lns_applicable(goal, sig, mode), "bang"), sig, mode);
  // walk every migration trace and check the correspondence at each state
  std::vector<Lns> stack = {frontier[0]};
  int states = 0;
  while (!stack.empty()) {
    Lns g = stack.back();
    stack.pop_back();
    ++states;
    // at most one unfinished link, and only as the last
    for (std::size_t k = 0; k + 1 < g.links.size(); ++k) CHECK(g.links[k].finished);
    if (g.comps.size() == 2) {
      const Lns& cur = g;
      std::set<std::string> inner_holes, outer_formulas, outer_holes;
      for (auto& lr : hole_leaves(cur.comps[1].ant)) inner_holes.insert(path_text(lr.leaf->hole_id));
      for (auto& lr : formula_leaves(cur.comps[0].ant)) outer_formulas.insert(path_text(lr.path));
      for (auto& lr : hole_leaves(cur.comps[0].ant)) outer_holes.insert(path_text(lr.leaf->hole_id));
      // inner holes = outer formulas still waiting, plus weakened leaves
      for (auto& p : outer_formulas) CHECK(inner_holes.count(p) == 1);
      for (auto& p : inner_holes) CHECK((outer_formulas.count(p) == 1 || outer_holes.count(p) == 1));
    }
    for (auto& inst : lns_applicable(g, sig, mode)) {
      if (inst.rule != "bang_k" && inst.rule != "bang_4" && inst.rule != "w_move") continue;
      for (auto& next : lns_apply(g, inst, sig, mode)) stack.push_back(next);
    }
  }
  CHECK(states >= 10);
}

TEST_CASE("Example 2: reachable inner antecedents at release") {
  // j in the 4-upset of i, 4 not on i, i incomparable to k, W on k
  Signature sig = Signature::make(
      {"i", "j", "k"}, {{"i", "j"}},
      {{"i", {Axiom::K}}, {"j", {Axiom::K, Axiom::Four}}, {"k", {Axiom::K, Axiom::W}}},
      SigMode::Functorial);
  REQUIRE(sig.valid());
  LnsMode mode = LnsMode::NonAssociative;
  Lns goal = parse_lns("(![i]a, (![j]b, ![k]c)) |- ![i](a * b)");
  auto nested = lns_apply(goal, find_rule(lns_applicable(goal, sig, mode), "bang"), sig, mode);

  std::set<std::string> released;
  std::vector<Lns> stack = nested;
  while (!stack.empty()) {
    Lns g = stack.back();
    stack.pop_back();
    for (auto& inst : lns_applicable(g, sig, mode)) {
      if (inst.rule == "release") {
        for (auto& next : lns_apply(g, inst, sig, mode)) released.insert(print_context(next.comps[0].ant));
      }
      if (inst.rule == "bang_k" || inst.rule == "bang_4" || inst.rule == "w_move")
        for (auto& next : lns_apply(g, inst, sig, mode)) stack.push_back(next);
    }
  }
  CHECK(released == std::set<std::string>{"(a, ![j]b)", "(a, b)"});
}
