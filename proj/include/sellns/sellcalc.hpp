#pragma once

#include "sellns/sequent.hpp"

namespace sellns {

// Backward rule engine for acLL over tree contexts.
//
// Rule names: init oneR zeroL | oneL tensorL plusL withR underR overR |
// tensorR underL overL plusR1 plusR2 withL1 withL2 | bangR bangL |
// W C E1 E2 A1 A1inv A2 A2inv.

/// Complete list of backward-applicable instances, in search order:
/// closing, invertible, branching, exponential, structural.
std::vector<RuleInst> applicable(const Sequent& seq, const Signature& sig);

/// Premises of one instance (empty = closed branch). Re-validates the
/// instance against the conclusion; throws InvalidInstance.
std::vector<Sequent> apply_rule(const Sequent& seq, const RuleInst& inst, const Signature& sig);

/// True iff the instance applies and yields exactly the claimed premises.
bool check_step(const Sequent& seq, const RuleInst& inst, const std::vector<Sequent>& premises,
                const Signature& sig);

/// Cheap probe equivalent to !applicable(seq, sig).empty().
bool has_applicable(const Sequent& seq, const Signature& sig);

// Rule-group enumerators shared with the LNS calculus. Instances are
// stamped with comp = 0; callers re-target them as needed.
void closing_applicable(const Sequent& seq, std::vector<RuleInst>& out);
void invertible_applicable(const Sequent& seq, std::vector<RuleInst>& out);
void branching_applicable(const Sequent& seq, std::vector<RuleInst>& out);
void exponential_applicable(const Sequent& seq, const Signature& sig, std::vector<RuleInst>& out);
void structural_applicable(const Sequent& seq, const Signature& sig, std::vector<RuleInst>& out);

/// Shared implementation for every rule above; used by apply_rule and by
/// the LNS engine for rules local to one component.
std::vector<Sequent> apply_local(const Sequent& seq, const RuleInst& inst, const Signature& sig);

}  // namespace sellns
