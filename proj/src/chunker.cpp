#include "textkg/chunker.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

#include "textkg/porter.hpp"
#include "textkg/textutil.hpp"

namespace textkg {
namespace {

bool is_noun(Upos pos) { return pos == Upos::NOUN || pos == Upos::PROPN; }

bool is_np_inner(Upos pos) { return pos == Upos::ADJ || is_noun(pos); }

bool is_noun_chunk(const Chunk& c) {
  return c.kind == ChunkKind::ENTITY || c.kind == ChunkKind::NOUN_PHRASE;
}

bool is_verbish(Upos pos) { return pos == Upos::VERB || pos == Upos::AUX; }

bool in_verb_group(Upos pos) {
  return is_verbish(pos) || pos == Upos::PART || pos == Upos::ADP;
}

std::vector<std::string> span_words(const Sentence& sent, int first, int last) {
  std::vector<std::string> words;
  for (int i = first; i <= last; ++i)
    words.push_back(sent.tokens[static_cast<size_t>(i)].word);
  return words;
}

// normalize_label that signals a degenerate span instead of throwing, so
// the chunker can skip spans that would carry no label (e.g. a noun-tagged
// bare determiner word from odd input).
std::optional<std::string> try_label(const std::vector<std::string>& words) {
  try {
    return normalize_label(words);
  } catch (const std::invalid_argument&) {
    return std::nullopt;
  }
}

// Label for a noun span: leading determiner tokens are dropped here, the
// rest goes through normalize_label.
std::optional<std::string> noun_span_label(const Sentence& sent, int first,
                                           int last) {
  int from = first;
  while (from < last && sent.tokens[static_cast<size_t>(from)].pos == Upos::DET)
    ++from;
  return try_label(span_words(sent, from, last));
}

std::vector<bool> coverage(const Sentence& sent, const std::vector<Chunk>& chunks) {
  std::vector<bool> covered(sent.tokens.size(), false);
  for (const auto& c : chunks)
    for (int i = c.first_token; i <= c.last_token; ++i)
      covered[static_cast<size_t>(i)] = true;
  return covered;
}

void sort_chunks(std::vector<Chunk>& chunks) {
  std::sort(chunks.begin(), chunks.end(),
            [](const Chunk& a, const Chunk& b) { return a.first_token < b.first_token; });
}

}  // namespace

std::vector<Chunk> chunk_noun_phrases(const Sentence& sentence) {
  std::vector<Chunk> chunks;
  const auto& toks = sentence.tokens;
  size_t i = 0;
  while (i < toks.size()) {
    size_t start = i;
    size_t run = i;
    if (toks[run].pos == Upos::DET) ++run;
    size_t run_end = run;
    while (run_end < toks.size() && is_np_inner(toks[run_end].pos)) ++run_end;
    // span must end on a noun; trailing adjectives stay unchunked
    size_t last_noun = run_end;
    for (size_t k = run_end; k-- > run;) {
      if (is_noun(toks[k].pos)) {
        last_noun = k;
        break;
      }
    }
    if (last_noun == run_end) {
      ++i;
      continue;
    }
    const auto label =
        noun_span_label(sentence, static_cast<int>(start), static_cast<int>(last_noun));
    if (!label) {
      i = last_noun + 1;
      continue;
    }
    Chunk c;
    c.sentence_index = sentence.index;
    c.first_token = static_cast<int>(start);
    c.last_token = static_cast<int>(last_noun);
    c.kind = ChunkKind::NOUN_PHRASE;
    c.label = *label;
    c.head_stem = porter_stem(lowercase(toks[last_noun].word));
    chunks.push_back(std::move(c));
    i = last_noun + 1;
  }
  return chunks;
}

namespace {

bool absorb_parentheses(const Sentence& sent, std::vector<Chunk>& chunks) {
  auto covered = coverage(sent, chunks);
  for (auto& c : chunks) {
    if (!is_noun_chunk(c)) continue;
    int before = c.first_token - 1;
    int after = c.last_token + 1;
    if (before < 0 || after >= static_cast<int>(sent.tokens.size())) continue;
    if (covered[static_cast<size_t>(before)] || covered[static_cast<size_t>(after)])
      continue;
    if (sent.tokens[static_cast<size_t>(before)].word == "(" &&
        sent.tokens[static_cast<size_t>(after)].word == ")") {
      c.first_token = before;
      c.last_token = after;
      return true;
    }
  }
  return false;
}

bool merge_np_of_np(const Sentence& sent, std::vector<Chunk>& chunks) {
  auto covered = coverage(sent, chunks);
  for (size_t a = 0; a + 1 < chunks.size(); ++a) {
    Chunk& left = chunks[a];
    Chunk& right = chunks[a + 1];
    if (!is_noun_chunk(left) || !is_noun_chunk(right)) continue;
    int mid = left.last_token + 1;
    if (mid + 1 != right.first_token) continue;
    const Token& tok = sent.tokens[static_cast<size_t>(mid)];
    if (covered[static_cast<size_t>(mid)]) continue;
    if (tok.pos != Upos::ADP || lowercase(tok.word) != "of") continue;
    left.last_token = right.last_token;
    left.label = left.label + " of " + right.label;
    left.head_stem = right.head_stem;
    left.kind = ChunkKind::NOUN_PHRASE;
    chunks.erase(chunks.begin() + static_cast<long>(a) + 1);
    return true;
  }
  return false;
}

bool merge_adjacent_nps(const Sentence& sent, std::vector<Chunk>& chunks) {
  for (size_t a = 0; a + 1 < chunks.size(); ++a) {
    Chunk& left = chunks[a];
    Chunk& right = chunks[a + 1];
    if (!is_noun_chunk(left) || !is_noun_chunk(right)) continue;
    if (left.last_token + 1 != right.first_token) continue;
    // only a bare compound continuation merges; a determiner (or an absorbed
    // parenthesis) opens a fresh phrase
    if (!is_np_inner(sent.tokens[static_cast<size_t>(right.first_token)].pos))
      continue;
    left.last_token = right.last_token;
    left.label = left.label + " " + right.label;
    left.head_stem = right.head_stem;
    left.kind = ChunkKind::NOUN_PHRASE;
    chunks.erase(chunks.begin() + static_cast<long>(a) + 1);
    return true;
  }
  return false;
}

bool form_verb_groups(const Sentence& sent, std::vector<Chunk>& chunks) {
  auto covered = coverage(sent, chunks);
  const auto& toks = sent.tokens;
  bool changed = false;
  size_t i = 0;
  while (i < toks.size()) {
    if (covered[i] || !in_verb_group(toks[i].pos)) {
      ++i;
      continue;
    }
    size_t end = i;
    while (end < toks.size() && !covered[end] && in_verb_group(toks[end].pos)) ++end;
    if (is_verbish(toks[i].pos) || is_verbish(toks[end - 1].pos)) {
      const auto label = try_label(
          span_words(sent, static_cast<int>(i), static_cast<int>(end - 1)));
      if (label) {
        Chunk c;
        c.sentence_index = sent.index;
        c.first_token = static_cast<int>(i);
        c.last_token = static_cast<int>(end - 1);
        c.kind = ChunkKind::PREDICATE;
        c.label = *label;
        int head = c.last_token;
        while (head > c.first_token &&
               !is_verbish(toks[static_cast<size_t>(head)].pos))
          --head;
        c.head_stem = porter_stem(lowercase(toks[static_cast<size_t>(head)].word));
        chunks.push_back(std::move(c));
        changed = true;
      }
    }
    i = end;
  }
  if (changed) sort_chunks(chunks);
  return changed;
}

bool mark_standalone_adpositions(const Sentence& sent, std::vector<Chunk>& chunks) {
  auto covered = coverage(sent, chunks);
  const auto& toks = sent.tokens;
  bool changed = false;
  for (size_t i = 0; i < toks.size(); ++i) {
    if (covered[i] || toks[i].pos != Upos::ADP) continue;
    bool left_np = false;
    bool right_np = false;
    for (const auto& c : chunks) {
      if (!is_noun_chunk(c)) continue;
      if (c.last_token + 1 == static_cast<int>(i)) left_np = true;
      if (c.first_token == static_cast<int>(i) + 1) right_np = true;
    }
    if (!left_np || !right_np) continue;
    Chunk c;
    c.sentence_index = sent.index;
    c.first_token = static_cast<int>(i);
    c.last_token = static_cast<int>(i);
    c.kind = ChunkKind::ADPOSITION;
    c.label = lowercase(toks[i].word);
    c.head_stem = porter_stem(c.label);
    chunks.push_back(std::move(c));
    covered[i] = true;
    changed = true;
  }
  if (changed) sort_chunks(chunks);
  return changed;
}

}  // namespace

std::vector<Chunk> apply_merge_rules(const Sentence& sentence,
                                     std::vector<Chunk> chunks) {
  sort_chunks(chunks);
  // Every merge removes a chunk or covers a token, so this terminates well
  // inside chunks+tokens passes.
  const size_t max_passes = chunks.size() + sentence.tokens.size() + 2;
  for (size_t pass = 0; pass < max_passes; ++pass) {
    bool changed = false;
    changed |= absorb_parentheses(sentence, chunks);
    changed |= merge_np_of_np(sentence, chunks);
    changed |= merge_adjacent_nps(sentence, chunks);
    changed |= form_verb_groups(sentence, chunks);
    changed |= mark_standalone_adpositions(sentence, chunks);
    if (!changed) break;
  }
  return chunks;
}

std::vector<Chunk> tag_entities(std::vector<Chunk> chunks,
                                const std::vector<GlossaryTerm>& glossary) {
  for (auto& c : chunks) {
    if (c.kind != ChunkKind::NOUN_PHRASE) continue;
    const auto stems = porter_stem_tokens(split_ws(c.label));
    for (const auto& term : glossary) {
      if (contains_seq(stems, term.stemmed)) {
        c.kind = ChunkKind::ENTITY;
        break;
      }
    }
  }
  return chunks;
}

void annotate_entity_tokens(Sentence& sentence, const std::vector<Chunk>& chunks) {
  for (const auto& c : chunks) {
    if (c.kind != ChunkKind::ENTITY) continue;
    for (int i = c.first_token; i <= c.last_token; ++i) {
      Token& tok = sentence.tokens[static_cast<size_t>(i)];
      tok.entity_type = "TERM";
      tok.entity_iob = i == c.first_token ? Iob::B : Iob::I;
    }
  }
}

std::string normalize_label(const std::vector<std::string>& tokens) {
  std::vector<std::string> out;
  for (const auto& raw : tokens) {
    std::string t = lowercase(raw);
    if (t.ends_with("'s")) t.resize(t.size() - 2);
    if (t.ends_with("\xe2\x80\x99s")) t.resize(t.size() - 4);
    if (t.ends_with("'")) t.resize(t.size() - 1);
    if (!t.empty()) out.push_back(std::move(t));
  }
  size_t from = 0;
  while (from < out.size() &&
         (out[from] == "a" || out[from] == "an" || out[from] == "the"))
    ++from;
  out.erase(out.begin(), out.begin() + static_cast<long>(from));
  if (out.empty()) throw std::invalid_argument("degenerate chunk label");
  return join(out, " ");
}

std::string squash_label(const std::string& label) {
  std::string out;
  for (char c : label)
    if (c != ' ') out += c;
  return out;
}

}  // namespace textkg
