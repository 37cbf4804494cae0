#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dacp/errors.hpp"

namespace dacp {

enum class Source { kNews, kFiling, kTask, kOther };

std::string to_string(Source s);
Source source_from_string(const std::string& s);

// One corpus record. n_tokens caches tokenize(text).size() and is kept
// consistent by the readers; mutate text only through make_document.
struct Document {
  std::string id;
  std::string text;
  std::optional<std::string> url;
  Source source = Source::kOther;
  std::optional<std::string> timestamp;
  std::size_t n_tokens = 0;
};

// Documents in file order. All downstream determinism (dedup clustering,
// tie-breaks, manifests) leans on that order being stable.
struct Corpus {
  std::vector<Document> documents;
  std::size_t total_tokens = 0;

  std::size_t size() const { return documents.size(); }
  bool empty() const { return documents.empty(); }

  void push_back(Document doc) {
    total_tokens += doc.n_tokens;
    documents.push_back(std::move(doc));
  }
};

// Either an absolute token count or a fraction of the corpus, never both.
class TokenBudget {
 public:
  static TokenBudget tokens(std::size_t n) {
    if (n == 0) throw ConfigError("token budget must be positive");
    TokenBudget b;
    b.tokens_ = n;
    return b;
  }

  static TokenBudget fraction(double f) {
    if (!(f > 0.0) || f > 1.0)
      throw ConfigError("budget fraction must be in (0, 1]");
    TokenBudget b;
    b.fraction_ = f;
    return b;
  }

  // Fractions resolve to floor(fraction * total_tokens).
  std::size_t resolve(std::size_t total_tokens) const {
    if (tokens_) return *tokens_;
    return static_cast<std::size_t>(*fraction_ *
                                    static_cast<double>(total_tokens));
  }

  bool is_fraction() const { return fraction_.has_value(); }
  double fraction_value() const { return fraction_.value(); }
  std::size_t token_value() const { return tokens_.value(); }

 private:
  TokenBudget() = default;
  std::optional<std::size_t> tokens_;
  std::optional<double> fraction_;
};

}  // namespace dacp
