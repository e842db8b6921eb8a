#include "sellns/latex.hpp"

#include <sstream>

#include "sellns/parser.hpp"

namespace sellns {

namespace {

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

const char* conn_tex(Conn c) {
  switch (c) {
    case Conn::Tensor: return " \\otimes ";
    case Conn::With: return " \\mathbin{\\&} ";
    case Conn::Plus: return " \\oplus ";
    case Conn::Under: return " \\backslash ";
    case Conn::Over: return " / ";
    case Conn::Par: return " \\parr ";
    default: return "";
  }
}

void tex_rec(std::ostream& os, const FormulaPtr& f, int min_prec) {
  int prec = precedence(f->conn);
  switch (f->conn) {
    case Conn::Atom: os << "\\mathit{" << f->name << "}"; return;
    case Conn::One: os << "\\mathbf{1}"; return;
    case Conn::Zero: os << "\\mathbf{0}"; return;
    case Conn::Bang:
    case Conn::Quest:
      os << (f->conn == Conn::Bang ? "!" : "?") << "^{" << f->name << "}";
      tex_rec(os, f->left, 4);
      return;
    default: break;
  }
  bool parens = prec < min_prec;
  if (parens) os << "(";
  int left_min = prec == 0 ? 1 : prec;
  int right_min = prec == 0 ? 1 : prec + 1;
  tex_rec(os, f->left, left_min);
  os << conn_tex(f->conn);
  tex_rec(os, f->right, right_min);
  if (parens) os << ")";
}

std::string subscripted(const std::string& head, const std::vector<std::string>& labels,
                        const std::string& tag = "") {
  std::string out = head;
  if (!labels.empty()) out += "^{" + labels[0] + "}";
  if (!tag.empty()) out += "_{" + tag + "}";
  return out;
}

std::string preamble() {
  return "\\documentclass{article}\n"
         "\\usepackage{proof}\n"
         "\\usepackage{amssymb}\n"
         "\\usepackage{graphicx}\n"
         "\\providecommand{\\parr}{\\mathbin{\\rotatebox[origin=c]{180}{\\&}}}\n"
         "\\begin{document}\n";
}

std::string document(const std::string& body) { return preamble() + "\\[\n" + body + "\n\\]\n\\end{document}\n"; }

std::string tex_node(const CertNode& node, SystemKind system) {
  std::string conclusion;
  if (system == SystemKind::Sell)
    conclusion = latex_sequent(parse_sequent_internal(node.conclusion));
  else
    conclusion = latex_lns(parse_lns_internal(node.conclusion));
  std::string premises;
  for (std::size_t k = 0; k < node.premises.size(); ++k) {
    if (k) premises += " & ";
    premises += tex_node(node.premises[k], system);
  }
  return "\\infer[" + latex_rule_name(node.inst) + "]{" + conclusion + "}{" + premises + "}";
}

}  // namespace

std::string latex_formula(const FormulaPtr& f) {
  std::ostringstream os;
  tex_rec(os, f, 0);
  return os.str();
}

std::string latex_context(const CtxPtr& c) {
  switch (c->kind) {
    case CtxKind::Empty: return "\\cdot";
    case CtxKind::Hole: return "\\{\\,\\}";
    case CtxKind::Leaf: return latex_formula(c->formula);
    case CtxKind::Node: return "(" + latex_context(c->left) + ", " + latex_context(c->right) + ")";
  }
  return "";
}

std::string latex_sequent(const Sequent& s) {
  std::string out = latex_context(s.ant) + " \\vdash";
  if (s.succ) out += " " + latex_formula(s.succ);
  return out;
}

std::string latex_lns(const Lns& g) {
  std::string out;
  for (std::size_t k = 0; k < g.comps.size(); ++k) {
    if (k > 0) {
      const Link& l = g.links[k - 1];
      out += l.finished ? " \\mathbin{\\leadsto_{" : " \\mathbin{\\hat{\\leadsto}_{";
      out += l.label + "}} ";
    }
    out += latex_sequent(g.comps[k]);
  }
  return out;
}

std::string latex_rule_name(const RuleInst& inst) {
  const std::string& r = inst.rule;
  const std::vector<std::string>& ls = inst.labels;
  if (r == "init") return "\\mathsf{init}";
  if (r == "oneR") return "\\mathbf{1}R";
  if (r == "oneL") return "\\mathbf{1}L";
  if (r == "zeroL") return "\\mathbf{0}L";
  if (r == "tensorR") return "\\otimes R";
  if (r == "tensorL") return "\\otimes L";
  if (r == "withR") return "\\& R";
  if (r == "withL1") return "\\& L_1";
  if (r == "withL2") return "\\& L_2";
  if (r == "plusR1") return "\\oplus R_1";
  if (r == "plusR2") return "\\oplus R_2";
  if (r == "plusL") return "\\oplus L";
  if (r == "underR") return "\\backslash R";
  if (r == "underL") return "\\backslash L";
  if (r == "overR") return "/R";
  if (r == "overL") return "/L";
  if (r == "bangR") return subscripted("!", ls) + "R";
  if (r == "bangL") return subscripted("!", ls) + "L";
  if (r == "bang") return subscripted("!", ls);
  if (r == "bang_k") return subscripted("!", ls, "\\mathsf{k}");
  if (r == "bang_4") return subscripted("!", ls, "4");
  if (r == "bang_d") return subscripted("!", ls, "\\mathsf{d}");
  if (r == "bang_t") return subscripted("!", ls, "\\mathsf{t}");
  if (r == "w_move") return subscripted("\\mathsf{w}", ls);
  if (r == "release") return "\\mathsf{r}";
  if (r == "W" || r == "C") return subscripted("\\mathsf{" + r + "}", ls);
  if (r == "E1") return subscripted("\\mathsf{E}1", ls);
  if (r == "E2") return subscripted("\\mathsf{E}2", ls);
  if (r == "A1") return subscripted("\\mathsf{A}1", ls);
  if (r == "A2") return subscripted("\\mathsf{A}2", ls);
  if (r == "A1inv") return subscripted("\\mathsf{A}1^{-}", ls);
  if (r == "A2inv") return subscripted("\\mathsf{A}2^{-}", ls);
  return "\\mathsf{" + r + "}";
}

std::string render_latex(const FormulaPtr& f) { return document(latex_formula(f)); }
std::string render_latex(const Sequent& s) { return document(latex_sequent(s)); }
std::string render_latex(const Lns& g) { return document(latex_lns(g)); }

std::string render_latex(const Certificate& cert) { return document(tex_node(cert.root, cert.system)); }

}  // namespace sellns
