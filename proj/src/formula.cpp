#include "sellns/formula.hpp"

namespace sellns {

namespace {
FormulaPtr mk(Conn c, std::string n, FormulaPtr l, FormulaPtr r) {
  return std::make_shared<const Formula>(c, std::move(n), std::move(l), std::move(r));
}
}  // namespace

FormulaPtr atom(std::string name) { return mk(Conn::Atom, std::move(name), nullptr, nullptr); }

FormulaPtr one() {
  static const FormulaPtr unit = mk(Conn::One, "", nullptr, nullptr);
  return unit;
}

FormulaPtr zero() {
  static const FormulaPtr unit = mk(Conn::Zero, "", nullptr, nullptr);
  return unit;
}

FormulaPtr tensor(FormulaPtr l, FormulaPtr r) { return mk(Conn::Tensor, "", std::move(l), std::move(r)); }
FormulaPtr with(FormulaPtr l, FormulaPtr r) { return mk(Conn::With, "", std::move(l), std::move(r)); }
FormulaPtr plus(FormulaPtr l, FormulaPtr r) { return mk(Conn::Plus, "", std::move(l), std::move(r)); }
FormulaPtr under(FormulaPtr l, FormulaPtr r) { return mk(Conn::Under, "", std::move(l), std::move(r)); }
FormulaPtr over(FormulaPtr l, FormulaPtr r) { return mk(Conn::Over, "", std::move(l), std::move(r)); }
FormulaPtr bang(std::string label, FormulaPtr body) { return mk(Conn::Bang, std::move(label), std::move(body), nullptr); }
FormulaPtr quest(std::string label, FormulaPtr body) { return mk(Conn::Quest, std::move(label), std::move(body), nullptr); }
FormulaPtr par(FormulaPtr l, FormulaPtr r) { return mk(Conn::Par, "", std::move(l), std::move(r)); }

bool formula_equal(const FormulaPtr& a, const FormulaPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  if (a->conn != b->conn || a->name != b->name) return false;
  return formula_equal(a->left, b->left) && formula_equal(a->right, b->right);
}

int formula_size(const FormulaPtr& f) {
  if (!f) return 0;
  return 1 + formula_size(f->left) + formula_size(f->right);
}

bool contains_par(const FormulaPtr& f) {
  if (!f) return false;
  if (f->conn == Conn::Par) return true;
  return contains_par(f->left) || contains_par(f->right);
}

bool contains_quest(const FormulaPtr& f) {
  if (!f) return false;
  if (f->conn == Conn::Quest) return true;
  return contains_quest(f->left) || contains_quest(f->right);
}

void collect_labels(const FormulaPtr& f, std::set<std::string>& out) {
  if (!f) return;
  if (f->conn == Conn::Bang || f->conn == Conn::Quest) out.insert(f->name);
  collect_labels(f->left, out);
  collect_labels(f->right, out);
}

}  // namespace sellns
