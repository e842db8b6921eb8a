#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "sellns/sequent.hpp"

namespace sellns {

struct Diagnostic {
  int line = 0, col = 0;
  std::string message;
  std::string text() const;
};

struct ParseError : std::runtime_error {
  ParseError(std::string msg, int line, int col);
  Diagnostic diagnostic;
};

// Throwing parsers. ASCII surface syntax with the Unicode glyphs accepted
// as input aliases. Grammar (tightest first):
//   primary  ::= atom | "1" | "0" | "![l]" primary | "?[l]" primary | "(" F ")"
//   F        ::= primary  {"*"} > {"&"} > {"+"} > {"\" | "/"}
// "\" is right-associative, "/" left-associative; mixing them without
// parentheses is rejected.
FormulaPtr parse_formula(const std::string& src);

// C ::= "()" | F | "(" C "," C ")"; commas strictly binary. Holes "{}" are
// only admitted by the internal form used for certificate payloads.
CtxPtr parse_context(const std::string& src);

/// "CTX |- F".
Sequent parse_sequent(const std::string& src);

/// Components joined by "//[i]" / "//^[i]"; a bare "//" uses the
/// distinguished default label "d". Succedents may be omitted.
Lns parse_lns(const std::string& src);

// Internal variants for certificate payloads: holes and missing succedents
// allowed everywhere.
CtxPtr parse_context_internal(const std::string& src);
Sequent parse_sequent_internal(const std::string& src);
Lns parse_lns_internal(const std::string& src);

template <typename T>
struct Parsed {
  std::optional<T> value;
  std::vector<Diagnostic> diagnostics;
  bool ok() const { return value.has_value(); }
};

Parsed<FormulaPtr> try_parse_formula(const std::string& src);
Parsed<CtxPtr> try_parse_context(const std::string& src);
Parsed<Sequent> try_parse_sequent(const std::string& src);
Parsed<Lns> try_parse_lns(const std::string& src);

}  // namespace sellns
