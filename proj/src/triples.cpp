#include "textkg/triples.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

#include "textkg/chunker.hpp"
#include "textkg/porter.hpp"
#include "textkg/textutil.hpp"

namespace textkg {
namespace {

bool is_noun_chunk(const Chunk& c) {
  return c.kind == ChunkKind::ENTITY || c.kind == ChunkKind::NOUN_PHRASE;
}

Span chunk_span(const Sentence& sent, const Chunk& c) {
  return Span{sent.tokens[static_cast<size_t>(c.first_token)].start,
              sent.tokens[static_cast<size_t>(c.last_token)].end};
}

std::string triple_key(const Triple& t) {
  std::ostringstream ss;
  ss << t.subject << '\x1f' << t.predicate << '\x1f' << t.object << '\x1f'
     << t.subject_span.start << ':' << t.subject_span.end << '\x1f'
     << t.predicate_span.start << ':' << t.predicate_span.end << '\x1f'
     << t.object_span.start << ':' << t.object_span.end;
  return ss.str();
}

}  // namespace

std::vector<Triple> assemble_positional(const Sentence& sentence,
                                        const std::vector<Chunk>& chunks,
                                        const std::vector<PredicateCandidate>& predicates) {
  std::vector<Triple> out;
  for (const auto& cand : predicates) {
    if (cand.chunk.kind != ChunkKind::PREDICATE) continue;
    int eff_last = cand.chunk.last_token + (cand.has_trailing_adposition ? 1 : 0);

    const Chunk* left = nullptr;
    const Chunk* right = nullptr;
    for (const auto& c : chunks) {
      if (!is_noun_chunk(c)) continue;
      if (c.last_token < cand.chunk.first_token &&
          (!left || c.last_token > left->last_token))
        left = &c;
      if (c.first_token > eff_last && (!right || c.first_token < right->first_token))
        right = &c;
    }
    if (!left || !right) continue;

    Triple t;
    t.subject = left->label;
    t.predicate = cand.label;
    t.object = right->label;
    t.document_id = sentence.tokens.empty() ? "" : sentence.tokens[0].document_id;
    t.sentence_index = sentence.index;
    t.subject_span = chunk_span(sentence, *left);
    t.predicate_span = chunk_span(sentence, cand.chunk);
    if (cand.has_trailing_adposition)
      t.predicate_span.end =
          sentence.tokens[static_cast<size_t>(cand.chunk.last_token) + 1].end;
    t.object_span = chunk_span(sentence, *right);
    t.phase = Phase::POSITIONAL;
    out.push_back(std::move(t));
  }
  return out;
}

const std::vector<std::string>& default_adpositions() {
  static const std::vector<std::string> list = {"in", "on",   "at", "through",
                                                "of", "with", "by", "for"};
  return list;
}

std::vector<Triple> assemble_prepositional(const Sentence& sentence,
                                           const std::vector<Chunk>& chunks,
                                           const std::vector<Triple>& positional,
                                           const std::vector<std::string>& adpositions) {
  const std::unordered_set<std::string> adp_set(adpositions.begin(), adpositions.end());
  std::vector<Triple> out;
  std::unordered_set<std::string> seen;

  auto emit = [&](const Chunk& left, const std::string& pred, Span pred_span,
                  const Chunk& right) {
    Triple t;
    t.subject = left.label;
    t.predicate = pred;
    t.object = right.label;
    t.document_id = sentence.tokens.empty() ? "" : sentence.tokens[0].document_id;
    t.sentence_index = sentence.index;
    t.subject_span = chunk_span(sentence, left);
    t.predicate_span = pred_span;
    t.object_span = chunk_span(sentence, right);
    t.phase = Phase::PREPOSITIONAL;
    if (seen.insert(triple_key(t)).second) out.push_back(std::move(t));
  };

  auto chunk_ending_at = [&](int token) -> const Chunk* {
    for (const auto& c : chunks)
      if (is_noun_chunk(c) && c.last_token == token) return &c;
    return nullptr;
  };
  auto chunk_starting_at = [&](int token) -> const Chunk* {
    for (const auto& c : chunks)
      if (is_noun_chunk(c) && c.first_token == token) return &c;
    return nullptr;
  };

  // Adposition chunks sitting between two noun chunks.
  for (const auto& c : chunks) {
    if (c.kind != ChunkKind::ADPOSITION || !adp_set.count(c.label)) continue;
    const Chunk* left = chunk_ending_at(c.first_token - 1);
    const Chunk* right = chunk_starting_at(c.last_token + 1);
    if (left && right) emit(*left, c.label, chunk_span(sentence, c), *right);
  }

  // Graph combination: a phase-I object immediately followed by an
  // adposition and another entity links to that entity.
  for (const auto& t : positional) {
    const Chunk* object_chunk = nullptr;
    for (const auto& c : chunks) {
      if (is_noun_chunk(c) && chunk_span(sentence, c) == t.object_span) {
        object_chunk = &c;
        break;
      }
    }
    if (!object_chunk) continue;
    const size_t adp_idx = static_cast<size_t>(object_chunk->last_token) + 1;
    if (adp_idx >= sentence.tokens.size()) continue;
    const Token& adp = sentence.tokens[adp_idx];
    const std::string adp_word = lowercase(adp.word);
    if (adp.pos != Upos::ADP || !adp_set.count(adp_word)) continue;
    const Chunk* right = chunk_starting_at(static_cast<int>(adp_idx) + 1);
    if (!right) continue;
    emit(*object_chunk, adp_word, Span{adp.start, adp.end}, *right);
  }
  return out;
}

std::unordered_set<std::string> parse_stopwords(const std::string& src) {
  std::unordered_set<std::string> out;
  std::istringstream in(src);
  std::string line;
  while (std::getline(in, line)) {
    std::string w = strip(line);
    if (w.empty() || w[0] == '#') continue;
    out.insert(lowercase(w));
  }
  return out;
}

std::unordered_set<std::string> load_stopwords(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open stopword file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_stopwords(ss.str());
}

namespace {

const std::unordered_set<std::string>& domain_stop_additions() {
  static const std::unordered_set<std::string> add = {"figure", "fig", "table",
                                                      "number"};
  return add;
}

const std::unordered_set<std::string>& figure_reference_tokens() {
  static const std::unordered_set<std::string> refs = {"figure", "fig", "table"};
  return refs;
}

bool label_is_removable(const std::string& label,
                        const std::unordered_set<std::string>& stoplist) {
  const auto tokens = split_ws(label);
  if (tokens.empty()) return true;
  bool all_stop = true;
  for (const auto& tok : tokens) {
    if (figure_reference_tokens().count(tok)) return true;
    const bool stop =
        stoplist.count(tok) || domain_stop_additions().count(tok) || is_numeral(tok);
    all_stop = all_stop && stop;
  }
  return all_stop;
}

}  // namespace

std::vector<Triple> filter_stopwords(const std::vector<Triple>& triples,
                                     const std::unordered_set<std::string>& stoplist) {
  std::vector<Triple> out;
  for (const auto& t : triples)
    if (!label_is_removable(t.subject, stoplist) &&
        !label_is_removable(t.object, stoplist))
      out.push_back(t);
  return out;
}

std::vector<Triple> filter_by_glossary(const std::vector<Triple>& triples,
                                       const std::vector<GlossaryTerm>& glossary) {
  auto side_matches = [&](const std::string& label) {
    const auto stems = porter_stem_tokens(split_ws(label));
    for (const auto& term : glossary)
      if (contains_seq(stems, term.stemmed)) return true;
    return false;
  };
  std::vector<Triple> out;
  for (const auto& t : triples)
    if (side_matches(t.subject) || side_matches(t.object)) out.push_back(t);
  return out;
}

namespace {

const std::map<std::string, std::string>& irregular_plurals() {
  static const std::map<std::string, std::string> table = {
      {"men", "man"},           {"women", "woman"},
      {"children", "child"},    {"people", "person"},
      {"feet", "foot"},         {"teeth", "tooth"},
      {"mice", "mouse"},        {"geese", "goose"},
      {"oxen", "ox"},           {"indices", "index"},
      {"matrices", "matrix"},   {"vertices", "vertex"},
      {"criteria", "criterion"}, {"phenomena", "phenomenon"},
  };
  return table;
}

std::string lemmatize_token(const std::string& tok) {
  auto it = irregular_plurals().find(tok);
  if (it != irregular_plurals().end()) return it->second;
  // conservative plural strip: leave -es/-ss/-us/-is forms alone so that
  // multi-word index terms keep their printed shape
  if (tok.size() > 3 && tok.ends_with("s") && !tok.ends_with("ss") &&
      !tok.ends_with("us") && !tok.ends_with("is") && !tok.ends_with("es"))
    return tok.substr(0, tok.size() - 1);
  return tok;
}

}  // namespace

std::string lemmatize_label(const std::string& label) {
  std::vector<std::string> out;
  for (const auto& tok : split_ws(label)) out.push_back(lemmatize_token(tok));
  return join(out, " ");
}

std::vector<Triple> lemmatize_triples(std::vector<Triple> triples) {
  std::vector<Triple> out;
  std::unordered_set<std::string> seen;
  for (auto& t : triples) {
    t.subject = lemmatize_label(t.subject);
    t.object = lemmatize_label(t.object);
    std::string key = t.subject + '\x1f' + t.predicate + '\x1f' + t.object;
    if (seen.insert(key).second) out.push_back(std::move(t));
  }
  return out;
}

std::vector<Triple> augment_context(const std::vector<Triple>& all_triples,
                                    const std::vector<Triple>& kept) {
  std::vector<Triple> out;
  for (const auto& t : kept) {
    out.push_back(t);
    auto it = std::find(all_triples.begin(), all_triples.end(), t);
    if (it == all_triples.end()) continue;
    ++it;
    if (it == all_triples.end()) continue;
    if (it->subject != t.object) continue;
    Triple context = *it;
    context.phase = Phase::CONTEXT;
    out.push_back(std::move(context));
  }
  return out;
}

Triple squash_triple(Triple t) {
  t.subject = squash_label(t.subject);
  t.predicate = squash_label(t.predicate);
  t.object = squash_label(t.object);
  return t;
}

}  // namespace textkg
