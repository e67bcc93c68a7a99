// Input normalization: text cleaning, sentence/token segmentation, the
// rule-based POS tagger fallback and glossary loading.
#pragma once

#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "textkg/types.hpp"

namespace textkg {

/// Normalizes raw textbook text: drops figure-caption lines, rejoins
/// hyphenated line wraps, collapses whitespace runs. Idempotent.
std::string clean_text(const std::string& raw);

/// Splits cleaned text into sentences and tokens with exact byte offsets.
/// POS and lemma fields stay empty pending tag_pos.
Document tokenize(const std::string& cleaned, const std::string& document_id);

/// Word-level split of a single line (no sentence segmentation); used for
/// glossary terms and label handling. Hyphenated words stay together.
std::vector<std::string> tokenize_words(const std::string& text);

// Closed- plus open-class word lists backing the built-in tagger.
// File format: word<TAB>POS with an optional third lemma column.
class Lexicon {
 public:
  struct Entry {
    Upos pos = Upos::X;
    std::string lemma;  // empty: derive lemma by rule
  };

  static Lexicon load_files(const std::string& closed_path,
                            const std::string& open_path);
  static Lexicon from_text(const std::string& closed_src,
                           const std::string& open_src);

  const Entry* find(const std::string& lower_word) const;
  bool is_verb_stem(const std::string& lower_word) const;
  size_t size() const { return entries_.size(); }

 private:
  void add_source(const std::string& src, const std::string& origin);

  std::unordered_map<std::string, Entry> entries_;
  std::unordered_set<std::string> verb_stems_;
};

/// Layered coarse tagging: closed-class lexicon, open-class lexicon, suffix
/// rules, NOUN default. Fills lemma for every token.
Document tag_pos(Document doc, const Lexicon& lexicon);

/// Parses one term per line; lowercases, tokenizes and stems each term,
/// collapses stem-level duplicates and sorts longest (token count) first.
std::vector<GlossaryTerm> load_glossary(const std::string& src);

/// Noun lemma used by the tagger: plural -s/-es stripping.
std::string noun_lemma(const std::string& lower_word);

}  // namespace textkg
