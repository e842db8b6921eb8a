#pragma once

#include <cstdint>
#include <memory>
#include <set>
#include <string>

namespace sellns {

// Connectives of the core language. Par belongs to the extended language:
// it is produced by the LNS interpretation for display/export and is never
// parsed or fed to the provers.
enum class Conn : std::uint8_t {
  Atom,
  One,
  Zero,
  Tensor,
  With,
  Plus,
  Under,  // "l \ r": l expected to the left
  Over,   // "l / r": r expected to the right
  Bang,
  Quest,
  Par,
};

class Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

// Immutable syntax tree with structural equality. Sharing is an
// implementation detail; value semantics throughout.
class Formula {
public:
  Conn conn;
  std::string name;        // atom name, or subexponential label for Bang/Quest
  FormulaPtr left, right;  // binary children; Bang/Quest keep the body in left

  Formula(Conn c, std::string n, FormulaPtr l, FormulaPtr r)
      : conn(c), name(std::move(n)), left(std::move(l)), right(std::move(r)) {}
};

FormulaPtr atom(std::string name);
FormulaPtr one();
FormulaPtr zero();
FormulaPtr tensor(FormulaPtr l, FormulaPtr r);
FormulaPtr with(FormulaPtr l, FormulaPtr r);
FormulaPtr plus(FormulaPtr l, FormulaPtr r);
FormulaPtr under(FormulaPtr l, FormulaPtr r);
FormulaPtr over(FormulaPtr l, FormulaPtr r);
FormulaPtr bang(std::string label, FormulaPtr body);
FormulaPtr quest(std::string label, FormulaPtr body);
FormulaPtr par(FormulaPtr l, FormulaPtr r);

bool formula_equal(const FormulaPtr& a, const FormulaPtr& b);

/// Node count: atoms and units are 1, unary adds 1, binary adds 1.
int formula_size(const FormulaPtr& f);

bool contains_par(const FormulaPtr& f);
bool contains_quest(const FormulaPtr& f);

/// Collects every Bang/Quest label occurring in f.
void collect_labels(const FormulaPtr& f, std::set<std::string>& out);

}  // namespace sellns
