#include <doctest.h>

#include "test_util.hpp"

using namespace sellns;
using namespace testutil;

namespace {

// Independent closure oracle: boolean-matrix Floyd-Warshall, nothing shared
// with the implementation.
Relation closure_oracle(const std::vector<std::string>& labels, const Relation& pairs) {
  std::size_t n = labels.size();
  auto index = [&](const std::string& l) {
    return std::find(labels.begin(), labels.end(), l) - labels.begin();
  };
  std::vector<std::vector<bool>> m(n, std::vector<bool>(n, false));
  for (std::size_t k = 0; k < n; ++k) m[k][k] = true;
  for (auto& [a, b] : pairs) m[index(a)][index(b)] = true;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        if (m[a][k] && m[k][b]) m[a][b] = true;
  Relation out;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (m[a][b]) out.emplace(labels[a], labels[b]);
  return out;
}

}  // namespace

TEST_CASE("closure: worked examples") {
  Relation got = closure({"i", "j", "k"}, {{"i", "j"}});
  Relation want = {{"i", "i"}, {"j", "j"}, {"k", "k"}, {"i", "j"}};
  CHECK(got == want);

  CHECK(closure({"a"}, {}) == Relation{{"a", "a"}});

  Relation trans = closure({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}});
  CHECK(trans.count({"a", "c"}) == 1);
}

TEST_CASE("closure: unknown labels rejected") {
  CHECK_THROWS_AS(closure({"a"}, {{"a", "b"}}), UnknownLabel);
}

TEST_CASE("closure agrees with the matrix oracle and is idempotent") {
  std::mt19937 rng(12041);
  std::vector<std::string> labels = {"a", "b", "c", "d", "e"};
  for (int round = 0; round < 60; ++round) {
    Relation pairs;
    int npairs = rng() % 7;
    for (int k = 0; k < npairs; ++k) {
      pairs.emplace(labels[rng() % labels.size()], labels[rng() % labels.size()]);
    }
    std::set<std::string> lset(labels.begin(), labels.end());
    Relation closed = closure(lset, pairs);
    CHECK(closed == closure_oracle(labels, pairs));
    CHECK(closed == closure(lset, closed));  // idempotent
  }
}

TEST_CASE("validate: Example 1 signature is valid") {
  CHECK(sig_ex1().validate().empty());
  CHECK(sig_ex1().valid());
}

TEST_CASE("validate: upward closure breach is reported as (i, j, axiom)") {
  Signature sig = Signature::make({"i", "j"}, {{"i", "j"}}, {{"i", {Axiom::C}}}, SigMode::Plain);
  auto violations = sig.validate();
  REQUIRE(violations.size() == 1);
  CHECK(violations[0].kind == SigViolation::Kind::UpwardClosure);
  CHECK(violations[0].i == "i");
  CHECK(violations[0].j == "j");
  CHECK(violations[0].missing == Axiom::C);
}

TEST_CASE("validate: functorial mode requires K everywhere") {
  Signature sig = Signature::make({"i"}, {}, {}, SigMode::Functorial);
  auto violations = sig.validate();
  REQUIRE(violations.size() == 1);
  CHECK(violations[0].kind == SigViolation::Kind::ModeRequirement);
  CHECK(violations[0].missing == Axiom::K);

  Signature assoc = Signature::make({"i"}, {}, {{"i", {Axiom::K}}}, SigMode::AssociativeFunctorial);
  CHECK(assoc.validate().size() == 2);  // A1 and A2 missing
}

TEST_CASE("upset: worked examples") {
  Signature sig = sig_ex1();
  CHECK(sig.upset("i") == std::set<std::string>{"i", "j"});
  CHECK(sig.upset("k") == std::set<std::string>{"k"});
  // no (j, ·) generator was declared, so reflexivity is everything
  CHECK(sig.upset("j") == std::set<std::string>{"j"});
  CHECK_THROWS_AS(sig.upset("nope"), UnknownLabel);
}

TEST_CASE("upset4: decided definition {j : i <= j, 4 in f(j)}") {
  Signature sig = Signature::make({"i", "j"}, {{"i", "j"}}, {{"j", {Axiom::Four}}}, SigMode::Plain);
  CHECK(sig.upset4("i") == std::set<std::string>{"j"});
  CHECK(sig.upset4("j") == std::set<std::string>{"j"});

  Signature none = sig_ex1();
  CHECK(none.upset4("i").empty());

  Signature refl = sig1({Axiom::Four});
  CHECK(refl.upset4("i") == std::set<std::string>{"i"});
}

TEST_CASE("upset is monotone and upset4 is contained in it") {
  std::mt19937 rng(977);
  std::vector<std::string> labels = {"a", "b", "c", "d"};
  for (int round = 0; round < 40; ++round) {
    Relation pairs;
    for (int k = 0; k < 4; ++k) pairs.emplace(labels[rng() % 4], labels[rng() % 4]);
    std::map<std::string, std::set<Axiom>> f;
    for (auto& l : labels)
      if (rng() % 2) f[l].insert(Axiom::Four);
    Signature sig = Signature::make(labels, pairs, f, SigMode::Plain);
    for (auto& a : labels) {
      for (auto& b : sig.upset(a)) {
        auto ua = sig.upset(a), ub = sig.upset(b);
        for (auto& x : ub) CHECK(ua.count(x) == 1);
      }
      for (auto& x : sig.upset4(a)) CHECK(sig.upset(a).count(x) == 1);
    }
  }
}

TEST_CASE("fingerprint tracks content") {
  Signature base = sig_ex1();
  Signature relabeled = Signature::make({"i", "j", "l"}, {{"i", "j"}},
                                        {{"i", {}}, {"j", {}}, {"l", {Axiom::W}}}, SigMode::Plain);
  Signature reordered = Signature::make({"i", "j", "k"}, {{"j", "i"}},
                                        {{"i", {}}, {"j", {}}, {"k", {Axiom::W}}}, SigMode::Plain);
  Signature refeatured = Signature::make({"i", "j", "k"}, {{"i", "j"}},
                                         {{"i", {}}, {"j", {}}, {"k", {Axiom::C}}}, SigMode::Plain);
  CHECK(base.fingerprint() != relabeled.fingerprint());
  CHECK(base.fingerprint() != reordered.fingerprint());
  CHECK(base.fingerprint() != refeatured.fingerprint());
  CHECK(base.fingerprint() == sig_ex1().fingerprint());
}
