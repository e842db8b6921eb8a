#include "sellns/printer.hpp"

#include <sstream>

namespace sellns {

namespace {

// Precedence: unary 4, * 3, & 2, + 1, residuals and | 0.  The two
// residuals never print unparenthesized under each other (mixing them
// without parentheses is a syntax error).
int precedence(Conn c) {
  switch (c) {
    case Conn::Tensor: return 3;
    case Conn::With: return 2;
    case Conn::Plus: return 1;
    case Conn::Under:
    case Conn::Over:
    case Conn::Par: return 0;
    default: return 4;
  }
}

const char* conn_token(Conn c) {
  switch (c) {
    case Conn::Tensor: return " * ";
    case Conn::With: return " & ";
    case Conn::Plus: return " + ";
    case Conn::Under: return " \\ ";
    case Conn::Over: return " / ";
    case Conn::Par: return " | ";
    default: return "";
  }
}

void print_rec(std::ostream& os, const FormulaPtr& f, int min_prec) {
  int prec = precedence(f->conn);
  switch (f->conn) {
    case Conn::Atom: os << f->name; return;
    case Conn::One: os << "1"; return;
    case Conn::Zero: os << "0"; return;
    case Conn::Bang:
    case Conn::Quest:
      os << (f->conn == Conn::Bang ? "!" : "?") << "[" << f->name << "]";
      print_rec(os, f->left, 4);
      return;
    default: break;
  }
  bool parens = prec < min_prec;
  if (parens) os << "(";
  // left-assoc binaries keep the left child bare; the right residual is the
  // exception, and residual children of residuals are always fenced.
  int left_min = prec == 0 ? 1 : prec;
  int right_min = prec == 0 ? 1 : prec + 1;
  print_rec(os, f->left, left_min);
  os << conn_token(f->conn);
  print_rec(os, f->right, right_min);
  if (parens) os << ")";
}

}  // namespace

std::string print_formula(const FormulaPtr& f) {
  std::ostringstream os;
  print_rec(os, f, 0);
  return os.str();
}

std::string print_context(const CtxPtr& c) {
  switch (c->kind) {
    case CtxKind::Empty: return "()";
    case CtxKind::Hole: return "{}";
    case CtxKind::Leaf: return print_formula(c->formula);
    case CtxKind::Node: return "(" + print_context(c->left) + ", " + print_context(c->right) + ")";
  }
  return "";
}

std::string print_sequent(const Sequent& s) {
  std::string out = print_context(s.ant) + " |-";
  if (s.succ) out += " " + print_formula(s.succ);
  return out;
}

std::string print_lns(const Lns& g) {
  std::string out;
  for (std::size_t k = 0; k < g.comps.size(); ++k) {
    if (k > 0) {
      const Link& l = g.links[k - 1];
      out += l.finished ? " //[" : " //^[";
      out += l.label + "] ";
    }
    out += print_sequent(g.comps[k]);
  }
  return out;
}

std::string print_inst(const RuleInst& inst) {
  std::ostringstream os;
  os << inst.rule << " comp=" << inst.comp;
  os << " pos=" << (inst.pos.empty() ? std::string("e") : path_text(inst.pos));
  if (inst.split) os << " split=" << (inst.split->empty() ? std::string("e") : path_text(*inst.split));
  if (inst.idx >= 0) os << " idx=" << inst.idx;
  if (inst.idx2 >= 0) os << " idx2=" << inst.idx2;
  if (!inst.labels.empty()) {
    os << " labels=";
    for (std::size_t k = 0; k < inst.labels.size(); ++k) os << (k ? "," : "") << inst.labels[k];
  }
  return os.str();
}

void state_key(std::string& out, const FormulaPtr& f) {
  out += static_cast<char>('A' + static_cast<int>(f->conn));
  out += f->name;
  if (f->left) {
    out += '(';
    state_key(out, f->left);
    if (f->right) {
      out += ',';
      state_key(out, f->right);
    }
    out += ')';
  }
}

void state_key(std::string& out, const CtxPtr& c) {
  switch (c->kind) {
    case CtxKind::Empty: out += 'e'; return;
    case CtxKind::Leaf:
      out += 'f';
      state_key(out, c->formula);
      return;
    case CtxKind::Hole:
      out += 'h';
      out += path_text(c->hole_id);
      out += ';';
      return;
    case CtxKind::Node:
      out += '(';
      state_key(out, c->left);
      out += ',';
      state_key(out, c->right);
      out += ')';
      return;
  }
}

void state_key(std::string& out, const Sequent& s) {
  state_key(out, s.ant);
  out += '|';
  if (s.succ) state_key(out, s.succ);
}

void state_key(std::string& out, const Lns& g) {
  for (std::size_t k = 0; k < g.comps.size(); ++k) {
    if (k > 0) {
      out += g.links[k - 1].finished ? '>' : '^';
      out += g.links[k - 1].label;
      out += ']';
    }
    state_key(out, g.comps[k]);
  }
}

}  // namespace sellns
