#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "sellns/formula.hpp"
#include "sellns/signature.hpp"

namespace sellns {

enum class Dir : std::uint8_t { L, R };
using Path = std::vector<Dir>;

std::string path_text(const Path& p);  // "" for the root, else e.g. "RL"
std::optional<Path> path_from_text(const std::string& s);

enum class CtxKind : std::uint8_t { Empty, Leaf, Hole, Node };

class ContextTree;
using CtxPtr = std::shared_ptr<const ContextTree>;

// Binary comma-tree of formulas. Empty only ever appears as a whole
// context; ctx_node collapses Empty children away. Hole leaves carry a
// stable identifier (the path they were created at), which operations on
// other branches never renumber.
class ContextTree {
public:
  CtxKind kind;
  FormulaPtr formula;  // Leaf
  Path hole_id;        // Hole
  CtxPtr left, right;  // Node

  ContextTree(CtxKind k, FormulaPtr f, Path id, CtxPtr l, CtxPtr r)
      : kind(k), formula(std::move(f)), hole_id(std::move(id)), left(std::move(l)), right(std::move(r)) {}
};

CtxPtr ctx_empty();
CtxPtr ctx_leaf(FormulaPtr f);
CtxPtr ctx_hole(Path id);
CtxPtr ctx_node(CtxPtr l, CtxPtr r);

struct BadPath : std::runtime_error {
  explicit BadPath(const Path& p);
};
struct NotAHole : std::runtime_error {
  explicit NotAHole(const Path& p);
};

bool ctx_equal(const CtxPtr& a, const CtxPtr& b);
bool is_concrete(const CtxPtr& c);  // every leaf is a formula
bool is_skeleton(const CtxPtr& c);  // every leaf is a hole
bool is_all_holes(const CtxPtr& c); // no formula leaves (Empty counts)

CtxPtr subtree_at(const CtxPtr& c, const Path& p);
CtxPtr replace_at(const CtxPtr& c, const Path& p, const CtxPtr& sub);

/// Same node shape with every formula leaf replaced by a hole whose id is
/// the leaf's path.
CtxPtr skeleton(const CtxPtr& c);

CtxPtr fill_hole(const CtxPtr& skel, const Path& p, const FormulaPtr& f);

/// Γ^{↑i}: keep Bang(j,·) leaves with j ∈ ↑i, weaken Bang(k,·) leaves with
/// W ∈ f(k), otherwise undefined. Any non-Bang leaf makes it undefined.
std::optional<CtxPtr> restrict_upset(const CtxPtr& c, const std::string& i, const Signature& sig);

/// Deletes every hole leaf, collapsing nodes.
CtxPtr prune_holes(const CtxPtr& c);

struct LeafRef {
  Path path;
  CtxPtr leaf;
};
std::vector<LeafRef> leaves(const CtxPtr& c);  // pre-order, left to right
std::vector<LeafRef> formula_leaves(const CtxPtr& c);
std::vector<LeafRef> hole_leaves(const CtxPtr& c);

std::optional<Path> find_hole(const CtxPtr& c, const Path& id);  // current path of hole `id`
CtxPtr fill_hole_by_id(const CtxPtr& c, const Path& id, const FormulaPtr& f);

/// The single label e such that every leaf formula of c is Bang(e,·);
/// nullopt if leaves are mixed, unbanged, or absent.
std::optional<std::string> uniform_bang_label(const CtxPtr& c);

struct Rewrite {
  std::string rule;   // W, C, E1, E2, A1, A1inv, A2, A2inv
  Path pos;
  std::string label;  // feature label licensing the step
  CtxPtr result;
};

/// All single-step feature-guarded structural rewrites, read backwards for
/// proof search. E and A come in both orientations; W deletes, C copies.
std::vector<Rewrite> structural_rewrites(const CtxPtr& c, const Signature& sig);

/// One named structural step at one position; nullopt when the pattern or
/// feature guard does not match. Agrees with structural_rewrites.
std::optional<CtxPtr> apply_structural_rewrite(const CtxPtr& c, const std::string& rule, const Path& pos,
                                               const std::string& label, const Signature& sig);

void collect_labels(const CtxPtr& c, std::set<std::string>& out);

// Associative-mode views: concrete contexts as flat lists, stored as
// right-leaning trees.
std::vector<FormulaPtr> ctx_to_list(const CtxPtr& c);
CtxPtr ctx_from_list(const std::vector<FormulaPtr>& fs);
CtxPtr flatten(const CtxPtr& c);

}  // namespace sellns
