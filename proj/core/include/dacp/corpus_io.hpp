#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "dacp/types.hpp"

namespace dacp {

// Reads a JSONL corpus: one JSON object per line with required fields
// id and text, optional url, source and timestamp. Recomputes n_tokens on
// load. Throws DataError naming the line for malformed lines and the id
// for duplicates.
Corpus read_corpus(const std::filesystem::path& path);
Corpus read_corpus(std::istream& in, const std::string& name);

// Writes JSONL with keys emitted in the order id, text, url, source,
// timestamp; absent optionals are omitted. read_corpus(write_corpus(c))
// preserves (id, text, url, source, timestamp) exactly.
void write_corpus(const Corpus& corpus, const std::filesystem::path& path);
void write_corpus(const Corpus& corpus, std::ostream& out);

}  // namespace dacp
