#include "sellns/parser.hpp"

#include <cctype>
#include <sstream>

namespace sellns {

std::string Diagnostic::text() const {
  std::ostringstream os;
  os << line << ":" << col << ": " << message;
  return os.str();
}

ParseError::ParseError(std::string msg, int line, int col)
    : std::runtime_error(std::to_string(line) + ":" + std::to_string(col) + ": " + msg),
      diagnostic{line, col, std::move(msg)} {}

namespace {

enum class Tok {
  Atom,   // identifier
  One,
  Zero,
  Star,
  Amp,
  Plus,
  BSlash,
  Slash,
  LParen,
  RParen,
  LBrack,
  RBrack,
  Comma,
  Bang,
  Quest,
  Hole,      // "{}"
  Turnstile, // "|-"
  Arrow,     // "//"
  ArrowHat,  // "//^"
  End,
};

struct Token {
  Tok kind;
  std::string text;
  int line, col;
};

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\''; }

std::vector<Token> lex(const std::string& src) {
  std::vector<Token> out;
  int line = 1, col = 1;
  std::size_t k = 0;
  auto push = [&](Tok t, std::string text, int l, int c) { out.push_back({t, std::move(text), l, c}); };
  auto starts = [&](const char* s) { return src.compare(k, std::string::traits_type::length(s), s) == 0; };
  while (k < src.size()) {
    char c = src[k];
    int l = line, cl = col;
    auto advance = [&](std::size_t n) {
      for (std::size_t t = 0; t < n; ++t) {
        if (src[k + t] == '\n') {
          ++line;
          col = 1;
        } else {
          ++col;
        }
      }
      k += n;
    };
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
      advance(1);
      continue;
    }
    // Unicode aliases for the ASCII surface syntax.
    if (starts("⊗")) { push(Tok::Star, "*", l, cl); advance(3); continue; }   // ⊗
    if (starts("⊕")) { push(Tok::Plus, "+", l, cl); advance(3); continue; }   // ⊕
    if (starts("⊸")) { push(Tok::BSlash, "\\", l, cl); advance(3); continue; } // ⊸
    if (starts("⟜")) { push(Tok::Slash, "/", l, cl); advance(3); continue; }  // ⟜
    if (starts("⊢")) { push(Tok::Turnstile, "|-", l, cl); advance(3); continue; } // ⊢
    if (starts("⤳")) { push(Tok::Arrow, "//", l, cl); advance(3); continue; } // ⤳
    if (starts("//^")) { push(Tok::ArrowHat, "//^", l, cl); advance(3); continue; }
    if (starts("//")) { push(Tok::Arrow, "//", l, cl); advance(2); continue; }
    if (starts("|-")) { push(Tok::Turnstile, "|-", l, cl); advance(2); continue; }
    if (starts("{}")) { push(Tok::Hole, "{}", l, cl); advance(2); continue; }
    switch (c) {
      case '*': push(Tok::Star, "*", l, cl); advance(1); continue;
      case '&': push(Tok::Amp, "&", l, cl); advance(1); continue;
      case '+': push(Tok::Plus, "+", l, cl); advance(1); continue;
      case '\\': push(Tok::BSlash, "\\", l, cl); advance(1); continue;
      case '/': push(Tok::Slash, "/", l, cl); advance(1); continue;
      case '(': push(Tok::LParen, "(", l, cl); advance(1); continue;
      case ')': push(Tok::RParen, ")", l, cl); advance(1); continue;
      case '[': push(Tok::LBrack, "[", l, cl); advance(1); continue;
      case ']': push(Tok::RBrack, "]", l, cl); advance(1); continue;
      case ',': push(Tok::Comma, ",", l, cl); advance(1); continue;
      case '!': push(Tok::Bang, "!", l, cl); advance(1); continue;
      case '?': push(Tok::Quest, "?", l, cl); advance(1); continue;
      case '1': push(Tok::One, "1", l, cl); advance(1); continue;
      case '0': push(Tok::Zero, "0", l, cl); advance(1); continue;
      default: break;
    }
    if (ident_start(c)) {
      std::size_t start = k;
      std::size_t n = 0;
      while (k + n < src.size() && ident_char(src[k + n])) ++n;
      push(Tok::Atom, src.substr(start, n), l, cl);
      advance(n);
      continue;
    }
    throw ParseError("unexpected character '" + std::string(1, c) + "'", l, cl);
  }
  out.push_back({Tok::End, "", line, col});
  return out;
}

class Parser {
public:
  Parser(const std::string& src, bool allow_holes) : toks_(lex(src)), allow_holes_(allow_holes) {}

  FormulaPtr formula_all() {
    FormulaPtr f = formula();
    expect_end();
    return f;
  }

  CtxPtr context_all() {
    CtxPtr c = context();
    expect_end();
    return finish_holes(c);
  }

  Sequent sequent_all(bool succ_required) {
    Sequent s = sequent(succ_required);
    expect_end();
    return s;
  }

  Lns lns_all(bool succ_required) {
    Lns g;
    g.comps.push_back(sequent(succ_required));
    while (peek().kind == Tok::Arrow || peek().kind == Tok::ArrowHat) {
      bool finished = peek().kind == Tok::Arrow;
      next();
      std::string label = "d";  // distinguished default label for a bare arrow
      if (peek().kind == Tok::LBrack) {
        next();
        label = expect_ident("nesting label");
        expect(Tok::RBrack, "']'");
      }
      g.links.push_back({label, finished});
      g.comps.push_back(sequent(succ_required));
    }
    expect_end();
    return g;
  }

private:
  std::vector<Token> toks_;
  std::size_t at_ = 0;
  bool allow_holes_;

  const Token& peek(std::size_t ahead = 0) const {
    std::size_t k = at_ + ahead;
    return k < toks_.size() ? toks_[k] : toks_.back();
  }
  const Token& next() { return toks_[at_ < toks_.size() - 1 ? at_++ : at_]; }

  [[noreturn]] void fail(const std::string& msg) const {
    const Token& t = peek();
    throw ParseError(msg, t.line, t.col);
  }

  void expect(Tok kind, const std::string& what) {
    if (peek().kind != kind) fail("expected " + what + (peek().text.empty() ? "" : " before '" + peek().text + "'"));
    next();
  }

  std::string expect_ident(const std::string& what) {
    if (peek().kind != Tok::Atom) fail("expected " + what);
    return next().text;
  }

  void expect_end() {
    if (peek().kind != Tok::End) fail("unexpected trailing input '" + peek().text + "'");
  }

  FormulaPtr primary() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::Atom: return atom(next().text);
      case Tok::One: next(); return one();
      case Tok::Zero: next(); return zero();
      case Tok::LParen: {
        next();
        FormulaPtr f = formula();
        expect(Tok::RParen, "')'");
        return f;
      }
      case Tok::Bang:
      case Tok::Quest: {
        bool is_bang = t.kind == Tok::Bang;
        next();
        expect(Tok::LBrack, "'[' after '" + std::string(is_bang ? "!" : "?") + "'");
        std::string label = expect_ident("subexponential label");
        expect(Tok::RBrack, "']'");
        FormulaPtr body = primary();
        return is_bang ? bang(label, body) : quest(label, body);
      }
      default: fail("expected a formula");
    }
  }

  FormulaPtr tensor_level() {
    FormulaPtr f = primary();
    while (peek().kind == Tok::Star) {
      next();
      f = tensor(f, primary());
    }
    return f;
  }

  FormulaPtr with_level() {
    FormulaPtr f = tensor_level();
    while (peek().kind == Tok::Amp) {
      next();
      f = with(f, tensor_level());
    }
    return f;
  }

  FormulaPtr plus_level() {
    FormulaPtr f = with_level();
    while (peek().kind == Tok::Plus) {
      next();
      f = plus(f, with_level());
    }
    return f;
  }

  FormulaPtr formula() {
    std::vector<FormulaPtr> parts{plus_level()};
    std::vector<Tok> ops;
    std::vector<Token> op_toks;
    while (peek().kind == Tok::BSlash || peek().kind == Tok::Slash) {
      op_toks.push_back(peek());
      ops.push_back(next().kind);
      parts.push_back(plus_level());
    }
    if (ops.empty()) return parts[0];
    for (std::size_t k = 1; k < ops.size(); ++k) {
      if (ops[k] != ops[0])
        throw ParseError("mixing '\\' and '/' without parentheses is ambiguous", op_toks[k].line, op_toks[k].col);
    }
    if (ops[0] == Tok::BSlash) {
      FormulaPtr f = parts.back();
      for (std::size_t k = parts.size() - 1; k-- > 0;) f = under(parts[k], f);
      return f;
    }
    FormulaPtr f = parts[0];
    for (std::size_t k = 1; k < parts.size(); ++k) f = over(f, parts[k]);
    return f;
  }

  CtxPtr context() {
    const Token& t = peek();
    if (t.kind == Tok::Hole) {
      if (!allow_holes_) fail("holes are not allowed in this context");
      next();
      return ctx_hole(Path{});
    }
    if (t.kind == Tok::LParen) {
      if (peek(1).kind == Tok::RParen) {
        next();
        next();
        return ctx_empty();
      }
      // Try the pair form first; fall back to a parenthesized formula leaf.
      // Once "C ," has been seen the pair form is committed and its errors
      // (in particular the binary-comma hint) surface as-is.
      std::size_t save = at_;
      next();
      bool committed = false;
      try {
        CtxPtr l = context();
        if (peek().kind == Tok::Comma) {
          committed = true;
          next();
          CtxPtr r = context();
          if (peek().kind == Tok::Comma)
            fail("commas are binary: nest pairs, e.g. ((a, b), c) or (a, (b, c))");
          expect(Tok::RParen, "')'");
          if (l->kind == CtxKind::Empty || r->kind == CtxKind::Empty)
            fail("the empty context '()' is only allowed as a whole context");
          return std::make_shared<const ContextTree>(CtxKind::Node, nullptr, Path{}, l, r);
        }
      } catch (const ParseError&) {
        if (committed) throw;
      }
      at_ = save;
    }
    return ctx_leaf(formula());
  }

  Sequent sequent(bool succ_required) {
    CtxPtr c = context();
    expect(Tok::Turnstile, "'|-'");
    FormulaPtr succ;
    if (peek().kind != Tok::End && peek().kind != Tok::Arrow && peek().kind != Tok::ArrowHat) {
      succ = formula();
    } else if (succ_required) {
      fail("expected a succedent formula after '|-'");
    }
    return {finish_holes(c), succ};
  }

  // Assign stable identifiers (their own paths) to freshly parsed holes.
  static CtxPtr finish_holes(const CtxPtr& c) {
    Path here;
    return renumber(c, here);
  }
  static CtxPtr renumber(const CtxPtr& c, Path& here) {
    switch (c->kind) {
      case CtxKind::Empty:
      case CtxKind::Leaf: return c;
      case CtxKind::Hole: return ctx_hole(here);
      case CtxKind::Node: {
        here.push_back(Dir::L);
        CtxPtr l = renumber(c->left, here);
        here.back() = Dir::R;
        CtxPtr r = renumber(c->right, here);
        here.pop_back();
        return std::make_shared<const ContextTree>(CtxKind::Node, nullptr, Path{}, l, r);
      }
    }
    return c;
  }
};

template <typename T, typename Fn>
Parsed<T> wrap(Fn&& fn) {
  Parsed<T> out;
  try {
    out.value = fn();
  } catch (const ParseError& e) {
    out.diagnostics.push_back(e.diagnostic);
  }
  return out;
}

}  // namespace

FormulaPtr parse_formula(const std::string& src) { return Parser(src, false).formula_all(); }
CtxPtr parse_context(const std::string& src) { return Parser(src, false).context_all(); }
Sequent parse_sequent(const std::string& src) { return Parser(src, false).sequent_all(true); }
Lns parse_lns(const std::string& src) { return Parser(src, false).lns_all(false); }

CtxPtr parse_context_internal(const std::string& src) { return Parser(src, true).context_all(); }
Sequent parse_sequent_internal(const std::string& src) { return Parser(src, true).sequent_all(false); }
Lns parse_lns_internal(const std::string& src) { return Parser(src, true).lns_all(false); }

Parsed<FormulaPtr> try_parse_formula(const std::string& src) {
  return wrap<FormulaPtr>([&] { return parse_formula(src); });
}
Parsed<CtxPtr> try_parse_context(const std::string& src) {
  return wrap<CtxPtr>([&] { return parse_context(src); });
}
Parsed<Sequent> try_parse_sequent(const std::string& src) {
  return wrap<Sequent>([&] { return parse_sequent(src); });
}
Parsed<Lns> try_parse_lns(const std::string& src) {
  return wrap<Lns>([&] { return parse_lns(src); });
}

}  // namespace sellns
