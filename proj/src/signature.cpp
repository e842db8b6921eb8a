#include "sellns/signature.hpp"

#include <algorithm>
#include <sstream>

namespace sellns {

const char* axiom_name(Axiom a) {
  switch (a) {
    case Axiom::C: return "C";
    case Axiom::W: return "W";
    case Axiom::A1: return "A1";
    case Axiom::A2: return "A2";
    case Axiom::E: return "E";
    case Axiom::K: return "K";
    case Axiom::Four: return "4";
    case Axiom::T: return "T";
    case Axiom::D: return "D";
  }
  return "?";
}

std::optional<Axiom> axiom_from_name(const std::string& name) {
  for (Axiom a : all_axioms())
    if (name == axiom_name(a)) return a;
  return std::nullopt;
}

const std::vector<Axiom>& all_axioms() {
  static const std::vector<Axiom> axioms = {Axiom::C, Axiom::W,    Axiom::A1, Axiom::A2, Axiom::E,
                                            Axiom::K, Axiom::Four, Axiom::T,  Axiom::D};
  return axioms;
}

const char* mode_name(SigMode m) {
  switch (m) {
    case SigMode::Plain: return "plain";
    case SigMode::Functorial: return "functorial";
    case SigMode::AssociativeFunctorial: return "associative";
  }
  return "?";
}

std::optional<SigMode> mode_from_name(const std::string& name) {
  if (name == "plain") return SigMode::Plain;
  if (name == "functorial") return SigMode::Functorial;
  if (name == "associative") return SigMode::AssociativeFunctorial;
  return std::nullopt;
}

Relation closure(const std::set<std::string>& labels, const Relation& pairs) {
  for (const auto& [a, b] : pairs) {
    if (!labels.count(a)) throw UnknownLabel(a);
    if (!labels.count(b)) throw UnknownLabel(b);
  }
  Relation rel = pairs;
  for (const auto& l : labels) rel.emplace(l, l);
  // Warshall; label sets are small.
  bool changed = true;
  while (changed) {
    changed = false;
    Relation next = rel;
    for (const auto& [a, b] : rel)
      for (const auto& [c, d] : rel)
        if (b == c && next.emplace(a, d).second) changed = true;
    rel = std::move(next);
  }
  return rel;
}

Signature Signature::make(std::vector<std::string> labels, const Relation& generator_pairs,
                          std::map<std::string, std::set<Axiom>> features, SigMode mode) {
  Signature sig;
  std::sort(labels.begin(), labels.end());
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
  sig.labels_ = std::move(labels);
  std::set<std::string> label_set(sig.labels_.begin(), sig.labels_.end());
  for (const auto& [l, _] : features)
    if (!label_set.count(l)) throw UnknownLabel(l);
  sig.generators_ = generator_pairs;
  sig.order_ = closure(label_set, generator_pairs);
  sig.features_ = std::move(features);
  for (const auto& l : sig.labels_) sig.features_.try_emplace(l);
  sig.mode_ = mode;
  return sig;
}

bool Signature::has_label(const std::string& l) const {
  return std::binary_search(labels_.begin(), labels_.end(), l);
}

bool Signature::leq(const std::string& a, const std::string& b) const {
  if (!has_label(a)) throw UnknownLabel(a);
  if (!has_label(b)) throw UnknownLabel(b);
  return order_.count({a, b}) > 0;
}

std::set<std::string> Signature::upset(const std::string& i) const {
  if (!has_label(i)) throw UnknownLabel(i);
  std::set<std::string> out;
  for (const auto& j : labels_)
    if (order_.count({i, j})) out.insert(j);
  return out;
}

std::set<std::string> Signature::upset4(const std::string& i) const {
  std::set<std::string> out;
  for (const auto& j : upset(i))
    if (has(j, Axiom::Four)) out.insert(j);
  return out;
}

const std::set<Axiom>& Signature::features(const std::string& i) const {
  auto it = features_.find(i);
  if (it == features_.end()) throw UnknownLabel(i);
  return it->second;
}

bool Signature::has(const std::string& i, Axiom a) const { return features(i).count(a) > 0; }

std::vector<SigViolation> Signature::validate() const {
  std::vector<SigViolation> out;
  for (const auto& [i, j] : order_) {
    if (i == j) continue;
    for (Axiom a : features(i)) {
      if (!has(j, a)) {
        std::ostringstream msg;
        msg << "upward closure: " << i << " <= " << j << " but " << axiom_name(a) << " in f(" << i
            << ") is missing from f(" << j << ")";
        out.push_back({SigViolation::Kind::UpwardClosure, i, j, a, msg.str()});
      }
    }
  }
  auto require_everywhere = [&](Axiom a) {
    for (const auto& i : labels_) {
      if (!has(i, a)) {
        std::ostringstream msg;
        msg << mode_name(mode_) << " mode: " << axiom_name(a) << " required in f(" << i << ")";
        out.push_back({SigViolation::Kind::ModeRequirement, i, i, a, msg.str()});
      }
    }
  };
  if (mode_ == SigMode::Functorial || mode_ == SigMode::AssociativeFunctorial) require_everywhere(Axiom::K);
  if (mode_ == SigMode::AssociativeFunctorial) {
    require_everywhere(Axiom::A1);
    require_everywhere(Axiom::A2);
  }
  return out;
}

std::string Signature::canonical_text() const {
  std::ostringstream os;
  os << "mode " << mode_name(mode_) << "\n";
  os << "labels";
  for (const auto& l : labels_) os << " " << l;
  os << "\norder";
  for (const auto& [a, b] : order_) os << " " << a << "<=" << b;
  os << "\n";
  for (const auto& l : labels_) {
    os << "f " << l << " =";
    for (Axiom a : all_axioms())
      if (has(l, a)) os << " " << axiom_name(a);
    os << "\n";
  }
  return os.str();
}

std::string Signature::fingerprint() const {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : canonical_text()) {
    h ^= c;
    h *= 1099511628211ull;
  }
  static const char* hex = "0123456789abcdef";
  std::string out(16, '0');
  for (int k = 15; k >= 0; --k) {
    out[k] = hex[h & 0xf];
    h >>= 4;
  }
  return out;
}

std::vector<SigViolation> validate_signature(const Signature& sig) { return sig.validate(); }

}  // namespace sellns
