#include "textkg/coref.hpp"

#include <algorithm>
#include <unordered_set>

#include "textkg/chunker.hpp"
#include "textkg/porter.hpp"
#include "textkg/textutil.hpp"

namespace textkg {
namespace {

const std::unordered_set<std::string>& pronoun_set() {
  static const std::unordered_set<std::string> set = {
      "it", "its", "they", "their", "them", "he",
      "she", "his", "her", "this", "these",
  };
  return set;
}

struct Candidate {
  int sentence = 0;
  int first_token = 0;
  int last_token = 0;
  bool glossary_match = false;
};

bool matches_glossary(const Sentence& sent, const Candidate& c,
                      const std::vector<GlossaryTerm>& glossary) {
  std::vector<std::string> words;
  for (int i = c.first_token; i <= c.last_token; ++i)
    words.push_back(sent.tokens[static_cast<size_t>(i)].word);
  const auto stems = porter_stem_tokens(words);
  for (const auto& term : glossary)
    if (contains_seq(stems, term.stemmed)) return true;
  return false;
}

// Surface text of the span without its leading determiners.
std::string surface_label(const Sentence& sent, const Candidate& c) {
  int from = c.first_token;
  while (from < c.last_token &&
         sent.tokens[static_cast<size_t>(from)].pos == Upos::DET)
    ++from;
  std::string out;
  for (int i = from; i <= c.last_token; ++i) {
    if (!out.empty()) out += ' ';
    out += sent.tokens[static_cast<size_t>(i)].word;
  }
  return out;
}

}  // namespace

CorefResult resolve_coreferences(Document doc,
                                 const std::vector<GlossaryTerm>& glossary,
                                 const CorefOptions& options) {
  CorefResult result;
  for (size_t s = 0; s < doc.sentences.size(); ++s) {
    Sentence& sent = doc.sentences[s];
    for (size_t t = 0; t < sent.tokens.size(); ++t) {
      Token& tok = sent.tokens[t];
      if (tok.pos != Upos::PRON && tok.pos != Upos::DET) continue;
      const std::string lower = lowercase(tok.word);
      if (!pronoun_set().count(lower)) continue;

      // Candidate order: the current sentence right to left (recency), then
      // earlier sentences newest first, each left to right so the sentence
      // subject comes before later mentions.
      std::vector<Candidate> candidates;
      auto add_spans = [&](int sent_idx, bool right_to_left, int before_token) {
        const Sentence& src = doc.sentences[static_cast<size_t>(sent_idx)];
        std::vector<Candidate> spans;
        for (const Chunk& np : chunk_noun_phrases(src)) {
          if (before_token >= 0 && np.last_token >= before_token) continue;
          spans.push_back(Candidate{sent_idx, np.first_token, np.last_token, false});
        }
        if (right_to_left) std::reverse(spans.begin(), spans.end());
        candidates.insert(candidates.end(), spans.begin(), spans.end());
      };
      add_spans(static_cast<int>(s), true, static_cast<int>(t));
      for (int back = 1; back <= options.window && back <= static_cast<int>(s); ++back)
        add_spans(static_cast<int>(s) - back, false, -1);
      if (candidates.empty()) continue;

      for (auto& c : candidates)
        c.glossary_match =
            matches_glossary(doc.sentences[static_cast<size_t>(c.sentence)], c, glossary);
      const Candidate* chosen = nullptr;
      for (const auto& c : candidates) {
        if (c.glossary_match) {
          chosen = &c;
          break;
        }
      }
      if (!chosen) chosen = &candidates.front();

      const std::string label =
          surface_label(doc.sentences[static_cast<size_t>(chosen->sentence)], *chosen);
      if (label.empty()) continue;

      CorefSubstitution sub;
      sub.sentence_index = static_cast<int>(s);
      sub.token_index = static_cast<int>(t);
      sub.pronoun = tok.word;
      sub.antecedent_label = label;
      sub.antecedent_sentence = chosen->sentence;
      result.substitutions.push_back(sub);

      const bool possessive_det =
          tok.pos == Upos::DET && t + 1 < sent.tokens.size() &&
          (sent.tokens[t + 1].pos == Upos::NOUN ||
           sent.tokens[t + 1].pos == Upos::PROPN ||
           sent.tokens[t + 1].pos == Upos::ADJ);
      tok.word = label;
      tok.lemma = lowercase(label);
      if (!possessive_det) tok.pos = Upos::NOUN;
    }
  }
  result.document = std::move(doc);
  return result;
}

}  // namespace textkg
