#include "textkg/relations.hpp"

#include <algorithm>
#include <unordered_set>

#include "textkg/textutil.hpp"

namespace textkg {

bool is_modal(const std::string& w) {
  static const std::unordered_set<std::string> modals = {
      "may", "might", "can", "could", "shall", "should", "will", "would", "must",
  };
  return modals.count(w) > 0;
}

std::vector<PredicateCandidate> extract_predicates(const Sentence& sentence,
                                                   const std::vector<Chunk>& chunks) {
  std::vector<bool> covered(sentence.tokens.size(), false);
  for (const auto& c : chunks)
    for (int i = c.first_token; i <= c.last_token; ++i)
      covered[static_cast<size_t>(i)] = true;

  std::vector<PredicateCandidate> out;
  for (const auto& c : chunks) {
    if (c.kind == ChunkKind::ADPOSITION) {
      PredicateCandidate cand;
      cand.chunk = c;
      cand.label = c.label;
      out.push_back(std::move(cand));
      continue;
    }
    if (c.kind != ChunkKind::PREDICATE) continue;

    PredicateCandidate cand;
    cand.chunk = c;
    std::vector<std::string> words;
    bool ends_in_adposition = false;
    for (int i = c.first_token; i <= c.last_token; ++i) {
      const Token& tok = sentence.tokens[static_cast<size_t>(i)];
      words.push_back(lowercase(tok.word));
      if (tok.pos == Upos::VERB || tok.pos == Upos::AUX)
        cand.verb_lemmas.push_back(tok.lemma.empty() ? lowercase(tok.word) : tok.lemma);
      ends_in_adposition = tok.pos == Upos::ADP;
    }
    const size_t next = static_cast<size_t>(c.last_token) + 1;
    if (next < sentence.tokens.size() && !covered[next] &&
        sentence.tokens[next].pos == Upos::ADP) {
      cand.has_trailing_adposition = true;
      cand.trailing_adposition = lowercase(sentence.tokens[next].word);
      words.push_back(cand.trailing_adposition);
    }
    if (cand.has_trailing_adposition || ends_in_adposition) {
      std::vector<std::string> kept;
      for (const auto& w : words)
        if (!is_modal(w)) kept.push_back(w);
      if (!kept.empty()) words = std::move(kept);
    }
    cand.label = join(words, " ");
    out.push_back(std::move(cand));
  }
  std::sort(out.begin(), out.end(),
            [](const PredicateCandidate& a, const PredicateCandidate& b) {
              return a.chunk.first_token < b.chunk.first_token;
            });
  return out;
}

}  // namespace textkg
