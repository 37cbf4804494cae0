#include "dacp/tokenize.hpp"

namespace dacp {
namespace {

inline bool is_space(unsigned char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' ||
         c == '\v';
}

inline bool is_word_byte(unsigned char c) {
  if (c >= 0x80) return true;  // UTF-8 lead/continuation bytes
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
         (c >= '0' && c <= '9');
}

inline char lower_ascii(unsigned char c) {
  return (c >= 'A' && c <= 'Z') ? static_cast<char>(c - 'A' + 'a')
                                : static_cast<char>(c);
}

}  // namespace

std::vector<std::string> tokenize(const std::string& text) {
  std::vector<std::string> tokens;
  std::string current;
  for (unsigned char c : text) {
    if (is_word_byte(c)) {
      current.push_back(lower_ascii(c));
      continue;
    }
    if (!current.empty()) {
      tokens.push_back(std::move(current));
      current.clear();
    }
    if (!is_space(c)) {
      tokens.emplace_back(1, static_cast<char>(c));
    }
  }
  if (!current.empty()) tokens.push_back(std::move(current));
  return tokens;
}

std::size_t count_word_tokens(const std::string& text) {
  std::size_t n = 0;
  for (const auto& tok : tokenize(text)) {
    if (tok.size() == 1 && !is_word_byte(static_cast<unsigned char>(tok[0])))
      continue;
    ++n;
  }
  return n;
}

Document make_document(std::string id, std::string text,
                       std::optional<std::string> url, Source source,
                       std::optional<std::string> timestamp) {
  Document doc;
  doc.id = std::move(id);
  doc.text = std::move(text);
  doc.url = std::move(url);
  doc.source = source;
  doc.timestamp = std::move(timestamp);
  doc.n_tokens = tokenize(doc.text).size();
  return doc;
}

}  // namespace dacp
