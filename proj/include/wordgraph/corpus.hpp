#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "wordgraph/errors.hpp"

namespace wordgraph {

// One POS-tagged token. `surface` is kept verbatim from the corpus
// (after optional case folding); `stem` is derived from it and equals
// the surface until preprocess() runs.
struct Token {
  std::string surface;
  std::string pos_tag;
  std::string stem;
};

struct TokenizedDocument {
  std::vector<std::vector<Token>> sentences;
  std::string source_id;

  std::size_t token_count() const {
    std::size_t n = 0;
    for (const auto& s : sentences) n += s.size();
    return n;
  }
};

// Suffix-stripping and stop-word configuration. Stem rules are kept
// sorted by descending code-point length so the longest match wins.
struct PreprocessConfig {
  std::vector<std::string> stem_rules;
  std::size_t min_stem_length = 2;
  std::unordered_set<std::string> stop_words;
  bool lowercase_fold = false;
};

struct PreprocessStats {
  std::size_t tokens_removed = 0;
  std::size_t sentences_dropped = 0;
};

namespace detail {

// Number of UTF-8 code points (continuation bytes don't count).
inline std::size_t codepoint_length(std::string_view s) {
  std::size_t n = 0;
  for (unsigned char c : s)
    if ((c & 0xC0) != 0x80) ++n;
  return n;
}

// Offset of the first invalid UTF-8 byte, if any.
inline std::optional<std::size_t> find_invalid_utf8(std::string_view bytes) {
  std::size_t i = 0;
  const std::size_t n = bytes.size();
  while (i < n) {
    const unsigned char b = static_cast<unsigned char>(bytes[i]);
    std::size_t need;
    std::uint32_t cp;
    if (b < 0x80) {
      ++i;
      continue;
    } else if ((b & 0xE0) == 0xC0) {
      need = 1;
      cp = b & 0x1F;
    } else if ((b & 0xF0) == 0xE0) {
      need = 2;
      cp = b & 0x0F;
    } else if ((b & 0xF8) == 0xF0) {
      need = 3;
      cp = b & 0x07;
    } else {
      return i;
    }
    if (i + need >= n) return i;  // truncated sequence
    for (std::size_t k = 1; k <= need; ++k) {
      const unsigned char c = static_cast<unsigned char>(bytes[i + k]);
      if ((c & 0xC0) != 0x80) return i;
      cp = (cp << 6) | (c & 0x3F);
    }
    // Reject overlong encodings, surrogates and out-of-range points.
    if ((need == 1 && cp < 0x80) || (need == 2 && cp < 0x800) ||
        (need == 3 && cp < 0x10000) || cp > 0x10FFFF ||
        (cp >= 0xD800 && cp <= 0xDFFF))
      return i;
    i += need + 1;
  }
  return std::nullopt;
}

inline std::string ascii_fold(std::string_view s) {
  std::string out(s);
  for (char& c : out)
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
  return out;
}

// Descending code-point length; ties broken lexicographically so the
// rule order is reproducible regardless of file order.
inline void sort_stem_rules(std::vector<std::string>& rules) {
  std::sort(rules.begin(), rules.end(),
            [](const std::string& a, const std::string& b) {
              const std::size_t la = codepoint_length(a);
              const std::size_t lb = codepoint_length(b);
              if (la != lb) return la > lb;
              return a < b;
            });
  rules.erase(std::unique(rules.begin(), rules.end()), rules.end());
}

}  // namespace detail

// Parses "surface/TAG" corpus text: one sentence per line, tokens
// separated by ASCII spaces, tag split on the last '/' (surfaces may
// contain '/', tags never do). Blank lines are skipped.
inline TokenizedDocument parse_pos_file(std::string_view bytes,
                                        std::string source_id = "") {
  if (auto bad = detail::find_invalid_utf8(bytes))
    throw ParseError("invalid UTF-8 at byte offset " + std::to_string(*bad),
                     *bad);

  TokenizedDocument doc;
  doc.source_id = std::move(source_id);

  std::size_t pos = 0;
  while (pos <= bytes.size()) {
    std::size_t eol = bytes.find('\n', pos);
    std::string_view line = (eol == std::string_view::npos)
                                ? bytes.substr(pos)
                                : bytes.substr(pos, eol - pos);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

    std::vector<Token> sentence;
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && line[i] == ' ') ++i;
      std::size_t j = i;
      while (j < line.size() && line[j] != ' ') ++j;
      if (j > i) {
        std::string_view item = line.substr(i, j - i);
        const std::size_t slash = item.rfind('/');
        Token tok;
        if (slash == std::string_view::npos || slash == 0) {
          // No tag, or a split that would leave an empty surface:
          // keep the whole item as the surface.
          tok.surface = std::string(item);
        } else {
          tok.surface = std::string(item.substr(0, slash));
          tok.pos_tag = std::string(item.substr(slash + 1));
        }
        tok.stem = tok.surface;
        sentence.push_back(std::move(tok));
      }
      i = j;
    }
    if (!sentence.empty()) doc.sentences.push_back(std::move(sentence));

    if (eol == std::string_view::npos) break;
    pos = eol + 1;
  }

  if (doc.sentences.empty())
    throw EmptyInputError("empty corpus: no sentences parsed");
  return doc;
}

// Inverse of parse_pos_file for normalized files: tokens joined by
// single spaces, one sentence per line, trailing newline.
inline std::string serialize_document(const TokenizedDocument& doc) {
  std::string out;
  for (const auto& sentence : doc.sentences) {
    for (std::size_t i = 0; i < sentence.size(); ++i) {
      if (i > 0) out += ' ';
      out += sentence[i].surface;
      if (!sentence[i].pos_tag.empty()) {
        out += '/';
        out += sentence[i].pos_tag;
      }
    }
    out += '\n';
  }
  return out;
}

// Strips the single longest matching suffix rule, provided the result
// keeps at least min_stem_length code points. At most one rule applies.
inline std::string stem(std::string_view word, const PreprocessConfig& config) {
  for (const auto& rule : config.stem_rules) {
    if (rule.empty() || rule.size() >= word.size()) continue;
    if (word.substr(word.size() - rule.size()) != rule) continue;
    std::string_view remainder = word.substr(0, word.size() - rule.size());
    if (detail::codepoint_length(remainder) >= config.min_stem_length)
      return std::string(remainder);
  }
  return std::string(word);
}

// Drops tokens whose stem is a stop word; sentences emptied by the
// removal are dropped as well.
inline TokenizedDocument remove_stop_words(const TokenizedDocument& doc,
                                           const PreprocessConfig& config,
                                           PreprocessStats* stats = nullptr) {
  TokenizedDocument out;
  out.source_id = doc.source_id;
  for (const auto& sentence : doc.sentences) {
    std::vector<Token> kept;
    kept.reserve(sentence.size());
    for (const auto& tok : sentence) {
      if (config.stop_words.count(tok.stem)) {
        if (stats) ++stats->tokens_removed;
        continue;
      }
      kept.push_back(tok);
    }
    if (kept.empty()) {
      if (stats) ++stats->sentences_dropped;
      continue;
    }
    out.sentences.push_back(std::move(kept));
  }
  return out;
}

// Case folding (optional), then stemming, then stop-word removal.
// Stems are always recomputed from the surface, which makes the whole
// pipeline idempotent. An empty result is allowed; graph construction
// rejects it downstream.
inline TokenizedDocument preprocess(const TokenizedDocument& doc,
                                    const PreprocessConfig& config,
                                    PreprocessStats* stats = nullptr) {
  TokenizedDocument folded;
  folded.source_id = doc.source_id;
  folded.sentences.reserve(doc.sentences.size());
  for (const auto& sentence : doc.sentences) {
    std::vector<Token> toks;
    toks.reserve(sentence.size());
    for (const auto& tok : sentence) {
      Token t = tok;
      if (config.lowercase_fold) t.surface = detail::ascii_fold(t.surface);
      t.stem = stem(t.surface, config);
      toks.push_back(std::move(t));
    }
    folded.sentences.push_back(std::move(toks));
  }
  return remove_stop_words(folded, config, stats);
}

// One entry per line, '#' starts a comment line, blank lines ignored.
inline std::vector<std::string> read_word_list(std::istream& in) {
  std::vector<std::string> words;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::size_t b = line.find_first_not_of(" \t");
    if (b == std::string::npos || line[b] == '#') continue;
    std::size_t e = line.find_last_not_of(" \t");
    words.push_back(line.substr(b, e - b + 1));
  }
  return words;
}

inline std::unordered_set<std::string> load_stop_words(const std::string& path,
                                                       bool lowercase_fold = false) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open stop-word file: " + path);
  std::unordered_set<std::string> stops;
  for (auto& w : read_word_list(in))
    stops.insert(lowercase_fold ? detail::ascii_fold(w) : w);
  return stops;
}

// File order is irrelevant; rules are sorted by descending length.
inline std::vector<std::string> load_stem_rules(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open stem-rule file: " + path);
  auto rules = read_word_list(in);
  detail::sort_stem_rules(rules);
  return rules;
}

}  // namespace wordgraph
