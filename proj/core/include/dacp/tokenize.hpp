#pragma once

#include <string>
#include <vector>

#include "dacp/types.hpp"

namespace dacp {

// Word tokenization used for all token accounting. Tokens are maximal runs
// of alphanumeric characters (bytes >= 0x80 count as letters so multi-byte
// UTF-8 sequences stay intact), lowercased, plus every other printable
// character as a standalone single-character token. Whitespace separates.
// Deterministic and locale-independent.
std::vector<std::string> tokenize(const std::string& text);

// Token count excluding standalone punctuation tokens; this is the "word"
// count used by the filing section-length filter.
std::size_t count_word_tokens(const std::string& text);

// Builds a Document with n_tokens already consistent with its text.
Document make_document(std::string id, std::string text,
                       std::optional<std::string> url = std::nullopt,
                       Source source = Source::kOther,
                       std::optional<std::string> timestamp = std::nullopt);

}  // namespace dacp
