#pragma once

#include "sellns/sellcalc.hpp"

namespace sellns {

// Linear nested sequent calculus for functorial signatures. Non-associative
// mode carries tree skeletons into nestings; associative mode flattens
// antecedents to lists.
//
// Exponential rules: bang (promotion), bang_k, bang_4, bang_d, bang_t,
// w_move, release. The local logical and structural rules of the plain
// calculus act inside the rightmost component; unguarded dereliction and
// the restricting promotion are replaced by the rules above.

enum class LnsMode { Associative, NonAssociative };

struct MissingSuccedent : std::runtime_error {
  MissingSuccedent() : std::runtime_error("component has no succedent") {}
};
struct NotConcrete : std::runtime_error {
  NotConcrete() : std::runtime_error("antecedent contains holes") {}
};
struct ModeMismatch : std::runtime_error {
  explicit ModeMismatch(const std::string& why) : std::runtime_error("mode mismatch: " + why) {}
};

/// ⨂ along the tree shape; ⨂() = 1.
FormulaPtr big_tensor(const CtxPtr& c);

/// ι(Γ ⊢ F) = ⨂Γ \ F and ι(Γ ⊢ F ⤳i ℋ) = (⨂Γ \ F) | ![i] ι(ℋ), identically
/// for unfinished links. Output lives in the extended language (Par).
FormulaPtr interpret(const Lns& g);

/// interpret with label membership checked against sig first.
FormulaPtr interpret(const Lns& g, const Signature& sig);

std::vector<RuleInst> lns_applicable(const Lns& g, const Signature& sig, LnsMode mode);

std::vector<Lns> lns_apply(const Lns& g, const RuleInst& inst, const Signature& sig, LnsMode mode);

bool lns_check_step(const Lns& g, const RuleInst& inst, const std::vector<Lns>& premises,
                    const Signature& sig, LnsMode mode);

/// End-active discipline: the instance only touches the two rightmost
/// components and the premise's rightmost component is active.
bool end_active_check(const Lns& g, const RuleInst& inst);

}  // namespace sellns
