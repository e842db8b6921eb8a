#pragma once

#include <atomic>
#include <cstdint>

#include "sellns/lnscalc.hpp"
#include "sellns/printer.hpp"

namespace sellns {

enum class SystemKind { Sell, LnsAssoc, LnsNonAssoc };
const char* system_name(SystemKind s);
std::optional<SystemKind> system_from_name(const std::string& name);

struct SearchBudget {
  int max_depth = 12;                        // rule applications per branch
  std::uint64_t max_nodes = 100000;          // total expansions per prove call
  bool loop_check = true;
  const std::atomic<bool>* cancel = nullptr; // polled between expansions
};

enum class Outcome { Proved, ExhaustedUnprovable, BoundReached };
const char* outcome_name(Outcome o);

struct CertNode {
  RuleInst inst;
  std::string conclusion;  // printed sequent / LNS, reparsed during checking
  std::vector<CertNode> premises;
};

// Re-checkable without search: every node stores its conclusion, and the
// checker replays each instance and compares against the recorded premises.
struct Certificate {
  SystemKind system = SystemKind::Sell;
  std::string sig_fingerprint;
  CertNode root;
};

struct SearchResult {
  Outcome outcome = Outcome::BoundReached;
  std::optional<Certificate> certificate;
  std::uint64_t nodes = 0;
};

struct IllFormedGoal : std::runtime_error {
  explicit IllFormedGoal(const std::string& why) : std::runtime_error("ill-formed goal: " + why) {}
};

// Depth-first iterative deepening with per-branch loop checking.
// ExhaustedUnprovable is only reported when no branch was cut by a bound.
SearchResult prove_sell(const Sequent& goal, const Signature& sig, const SearchBudget& budget);
SearchResult prove_lns(const Lns& goal, const Signature& sig, LnsMode mode, const SearchBudget& budget);
SearchResult prove(SystemKind system, const Lns& goal, const Signature& sig, const SearchBudget& budget);

struct Verdict {
  bool accepted = false;
  std::string reason;          // empty when accepted
  std::vector<int> node_path;  // child indices from the root to the offending node
};

Verdict check_certificate(const Certificate& cert, const Signature& sig);

struct FragmentViolation : std::runtime_error {
  explicit FragmentViolation(const std::string& why)
      : std::runtime_error("outside the oracle fragment: " + why) {}
};

/// Exhaustive decision procedure for the multiplicative fragment (atoms,
/// *, \, /, 1; formula size <= 7, no exponentials). Deliberately written as
/// a direct structural recursion, independent of the rule engine, to
/// cross-validate prove.
bool oracle_provable(const Sequent& seq, const Signature& sig);

/// Provability probe for one axiom at one label, over atoms p, q, r.
Sequent axiom_instance(Axiom a, const std::string& label);

}  // namespace sellns
