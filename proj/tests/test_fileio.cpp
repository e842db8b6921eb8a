#include <doctest.h>

#include "sellns/fileio.hpp"
#include "sellns/latex.hpp"
#include "test_util.hpp"

using namespace sellns;
using namespace testutil;

TEST_CASE("signature files: round trip") {
  Signature sig = sig_ex1();
  std::string text = signature_to_text(sig);
  Signature back = signature_from_text(text);
  CHECK(back.fingerprint() == sig.fingerprint());
  CHECK(back.mode() == SigMode::Plain);
  CHECK(back.upset("i") == std::set<std::string>{"i", "j"});
}

TEST_CASE("signature files: hand-written form loads") {
  std::string text = R"({
    "format": 1,
    "labels": ["i", "j", "k"],
    "order": [["i", "j"]],
    "features": {"k": ["W"], "j": ["4", "K"]},
    "mode": "plain"
  })";
  Signature sig = signature_from_text(text);
  CHECK(sig.has("k", Axiom::W));
  CHECK(sig.has("j", Axiom::Four));
  CHECK(sig.upset4("i") == std::set<std::string>{"j"});
}

TEST_CASE("signature files: diagnostics accumulate") {
  std::string text = R"({
    "format": 1,
    "labels": ["i", 3],
    "order": [["i"]],
    "features": {"i": ["Q"]},
    "mode": "sideways"
  })";
  try {
    signature_from_text(text);
    FAIL("expected a FileFormatError");
  } catch (const FileFormatError& e) {
    CHECK(e.diagnostics.size() == 4);
  }
  CHECK_THROWS_AS(signature_from_text("{\"labels\": []}"), FileFormatError);
  CHECK_THROWS_AS(signature_from_text("not json"), FileFormatError);
  // closure input outside the label set
  CHECK_THROWS_AS(signature_from_text(R"({"format":1,"labels":["a"],"order":[["a","z"]]})"),
                  FileFormatError);
}

TEST_CASE("certificate files: round trip and self-description") {
  Signature sig = sig_ex1();
  SearchResult res = prove_sell(seq("(![i]a, (![j]b, ![k]c)) |- ![i](a * b)"), sig, SearchBudget{});
  REQUIRE(res.certificate.has_value());
  std::string text = certificate_to_text(*res.certificate);
  Certificate back = certificate_from_text(text);
  CHECK(back.sig_fingerprint == sig.fingerprint());
  CHECK(back.system == SystemKind::Sell);
  CHECK(check_certificate(back, sig).accepted);  // no goal text needed, only sig + cert
}

TEST_CASE("certificate files: malformed documents are rejected with reasons") {
  CHECK_THROWS_AS(certificate_from_text("{\"format\": 2}"), FileFormatError);
  CHECK_THROWS_AS(certificate_from_text(R"({"format":1,"kind":"certificate"})"), FileFormatError);
}

TEST_CASE("latex: Example 1 certificate renders as a 6-node tree") {
  Signature sig = sig_ex1();
  SearchResult res = prove_sell(seq("(![i]a, (![j]b, ![k]c)) |- ![i](a * b)"), sig, SearchBudget{});
  REQUIRE(res.certificate.has_value());
  std::string doc = render_latex(*res.certificate);
  // one \infer per proof node: promotion, tensor split, two derelictions, two inits
  std::size_t count = 0;
  for (std::size_t at = doc.find("\\infer"); at != std::string::npos; at = doc.find("\\infer", at + 1))
    ++count;
  CHECK(count == 6);
  CHECK(doc.find("\\documentclass") == 0);
  CHECK(doc.find("\\end{document}") != std::string::npos);
  // brace balance, since we cannot run latex here
  int depth = 0;
  for (char c : doc) {
    if (c == '{') ++depth;
    if (c == '}') --depth;
    CHECK(depth >= 0);
  }
  CHECK(depth == 0);
}

TEST_CASE("latex: formulas and links") {
  CHECK(latex_formula(fml("![i](a * b)")) == "!^{i}(\\mathit{a} \\otimes \\mathit{b})");
  CHECK(latex_sequent(seq("() |- 1")) == "\\cdot \\vdash \\mathbf{1}");
  std::string lns = latex_lns(parse_lns("a |- b //^[i] c |- d"));
  CHECK(lns.find("\\hat{\\leadsto}_{i}") != std::string::npos);
  std::string par = latex_formula(interpret(parse_lns("a |- b //[i] c |- d")));
  CHECK(par.find("\\parr") != std::string::npos);
}
