#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace sellns {

// Structural and modal axioms a subexponential label may carry.
enum class Axiom : std::uint8_t { C, W, A1, A2, E, K, Four, T, D };

/// Display name; Four prints as "4".
const char* axiom_name(Axiom a);
std::optional<Axiom> axiom_from_name(const std::string& name);
const std::vector<Axiom>& all_axioms();

enum class SigMode : std::uint8_t { Plain, Functorial, AssociativeFunctorial };

const char* mode_name(SigMode m);
std::optional<SigMode> mode_from_name(const std::string& name);

struct UnknownLabel : std::runtime_error {
  explicit UnknownLabel(const std::string& label)
      : std::runtime_error("unknown label: " + label), label(label) {}
  std::string label;
};

using LabelPair = std::pair<std::string, std::string>;
using Relation = std::set<LabelPair>;

/// Smallest reflexive-transitive relation on `labels` containing `pairs`.
/// Throws UnknownLabel if a pair mentions a label outside the set.
Relation closure(const std::set<std::string>& labels, const Relation& pairs);

struct SigViolation {
  enum class Kind { UpwardClosure, ModeRequirement } kind;
  std::string i, j;  // i ⪯ j with f(i) ⊄ f(j); i == j for mode violations
  Axiom missing;
  std::string message;
};

// Subexponential signature Σ = (I, ⪯, f). The stored order is always the
// reflexive-transitive closure of the generating pairs; user input is
// never trusted to be a pre-order.
class Signature {
public:
  Signature() = default;

  static Signature make(std::vector<std::string> labels, const Relation& generator_pairs,
                        std::map<std::string, std::set<Axiom>> features, SigMode mode);

  const std::vector<std::string>& labels() const { return labels_; }
  bool has_label(const std::string& l) const;
  SigMode mode() const { return mode_; }
  const Relation& order() const { return order_; }
  const Relation& generators() const { return generators_; }

  /// a ⪯ b
  bool leq(const std::string& a, const std::string& b) const;

  /// ↑i = {j : i ⪯ j}. Throws UnknownLabel.
  std::set<std::string> upset(const std::string& i) const;

  /// ↑4 i = {j : i ⪯ j and 4 ∈ f(j)}. Throws UnknownLabel.
  std::set<std::string> upset4(const std::string& i) const;

  const std::set<Axiom>& features(const std::string& i) const;
  bool has(const std::string& i, Axiom a) const;

  /// Upward-closure and mode violations; empty means valid. Violations are
  /// data, not failures.
  std::vector<SigViolation> validate() const;
  bool valid() const { return validate().empty(); }

  /// Stable canonical serialization (labels, closed order, features, mode).
  std::string canonical_text() const;

  /// FNV-1a 64-bit hash of canonical_text(), hex encoded.
  std::string fingerprint() const;

private:
  std::vector<std::string> labels_;
  Relation generators_;
  Relation order_;  // closed
  std::map<std::string, std::set<Axiom>> features_;
  SigMode mode_ = SigMode::Plain;
};

/// Free-function form of Signature::validate.
std::vector<SigViolation> validate_signature(const Signature& sig);

}  // namespace sellns
