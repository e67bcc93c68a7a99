// Shared fixture paths and random generators for the test suites.
#pragma once

#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "textkg/ingest.hpp"
#include "textkg/types.hpp"

#ifndef TEXTKG_DATA_DIR
#define TEXTKG_DATA_DIR "data"
#endif
#ifndef TEXTKG_FIXTURE_DIR
#define TEXTKG_FIXTURE_DIR "tests/fixtures"
#endif

namespace testsupport {

inline std::string data_path(const std::string& name) {
  return std::string(TEXTKG_DATA_DIR) + "/" + name;
}

inline std::string fixture_path(const std::string& name) {
  return std::string(TEXTKG_FIXTURE_DIR) + "/" + name;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE_MESSAGE(in.good(), "missing file: " << path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline const textkg::Lexicon& lexicon() {
  static const textkg::Lexicon lex = textkg::Lexicon::load_files(
      data_path("lexicon_closed.tsv"), data_path("lexicon_open.tsv"));
  return lex;
}

// Tags a raw sentence through the normal ingest path.
inline textkg::Document make_doc(const std::string& text,
                                 const std::string& id = "doc") {
  return textkg::tag_pos(textkg::tokenize(textkg::clean_text(text), id), lexicon());
}

using Rng = std::mt19937;

inline int rand_int(Rng& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

inline std::string rand_word(Rng& rng, int min_len = 1, int max_len = 8) {
  static const char alphabet[] = "abcdefghijklmnopqrstuvwxyz";
  int len = rand_int(rng, min_len, max_len);
  std::string w;
  for (int i = 0; i < len; ++i) w += alphabet[rand_int(rng, 0, 25)];
  return w;
}

// Synthetic tagged sentence over a random POS sequence; offsets are exact.
inline textkg::Sentence rand_sentence(Rng& rng, int max_tokens = 12) {
  using textkg::Upos;
  static const Upos pool[] = {Upos::NOUN, Upos::VERB, Upos::ADJ,  Upos::DET,
                              Upos::ADP,  Upos::AUX,  Upos::PART, Upos::ADV,
                              Upos::PRON, Upos::PUNCT, Upos::PROPN};
  textkg::Sentence sent;
  sent.index = 0;
  int n = rand_int(rng, 1, max_tokens);
  int cursor = 0;
  for (int i = 0; i < n; ++i) {
    textkg::Token tok;
    tok.document_id = "rand";
    tok.sentence_index = 0;
    tok.token_index = i;
    tok.pos = pool[rand_int(rng, 0, 10)];
    tok.word = tok.pos == Upos::PUNCT
                   ? std::string(1, ".,;()!?"[rand_int(rng, 0, 6)])
                   : rand_word(rng);
    tok.lemma = tok.word;
    tok.start = cursor;
    tok.end = cursor + static_cast<int>(tok.word.size());
    cursor = tok.end + 1;
    sent.tokens.push_back(std::move(tok));
  }
  return sent;
}

inline textkg::Triple rand_triple(Rng& rng, const std::vector<std::string>& vocab) {
  auto pick = [&]() { return vocab[static_cast<size_t>(rand_int(rng, 0, static_cast<int>(vocab.size()) - 1))]; };
  textkg::Triple t;
  t.subject = pick();
  t.predicate = pick();
  t.object = pick();
  t.document_id = "rand";
  t.sentence_index = rand_int(rng, 0, 5);
  t.subject_span = {0, 1};
  t.predicate_span = {2, 3};
  t.object_span = {4, 5};
  return t;
}

}  // namespace testsupport
