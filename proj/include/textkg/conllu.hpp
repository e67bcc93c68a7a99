// CoNLL-U ingestion and debug serialization (10-column, UTF-8, LF).
#pragma once

#include <stdexcept>
#include <string>

#include "textkg/types.hpp"

namespace textkg {

class ConlluError : public std::runtime_error {
 public:
  ConlluError(int line, const std::string& what)
      : std::runtime_error("conllu line " + std::to_string(line) + ": " + what),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

/// Parses CoNLL-U text. Multi-word-token ranges (1-2) and empty nodes (1.1)
/// are skipped; "_" columns map to empty fields; offsets are reconstructed
/// from the SpaceAfter=No convention. Throws ConlluError on malformed lines.
Document parse_conllu(const std::string& src, const std::string& document_id = "doc");

/// Deterministic 10-column rendering; parse_conllu(serialize_conllu(d), d.id)
/// reproduces d exactly.
std::string serialize_conllu(const Document& doc);

}  // namespace textkg
