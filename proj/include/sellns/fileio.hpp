#pragma once

#include "sellns/search.hpp"

namespace sellns {

struct FileFormatError : std::runtime_error {
  explicit FileFormatError(std::string why, std::vector<std::string> diags = {})
      : std::runtime_error(std::move(why)), diagnostics(std::move(diags)) {}
  std::vector<std::string> diagnostics;
};

// Signature files: JSON with a "format": 1 header and keys labels, order,
// features, mode. The stored order lists the generating pairs; the closure
// is recomputed on load.
Signature signature_from_text(const std::string& text);
std::string signature_to_text(const Signature& sig);
Signature load_signature_file(const std::string& path);

// Certificate files are self-describing: system tag, signature fingerprint
// and the proof tree with per-node conclusions.
Certificate certificate_from_text(const std::string& text);
std::string certificate_to_text(const Certificate& cert);
Certificate load_certificate_file(const std::string& path);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace sellns
