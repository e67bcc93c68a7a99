// Shared document and triple model used by every pipeline stage.
#pragma once

#include <string>
#include <vector>

namespace textkg {

// Coarse universal POS labels. X doubles as "not tagged yet": the raw-text
// path leaves tokens at X until tag_pos runs, and unknown input tags map
// to X as well.
enum class Upos {
  ADJ, ADP, ADV, AUX, CCONJ, DET, INTJ, NOUN, NUM, PART,
  PRON, PROPN, PUNCT, SCONJ, SYM, VERB, X,
};

const char* to_string(Upos pos);
Upos upos_from_string(const std::string& tag);  // unknown -> Upos::X

enum class Iob { B, I, O };

struct Token {
  std::string document_id;
  int sentence_index = 0;   // 0-based
  int token_index = 0;      // 0-based within sentence
  std::string word;         // surface form
  std::string lemma;
  Upos pos = Upos::X;
  std::string pos_tag;      // fine-grained tag, may be empty
  std::string entity_type;  // empty until tagged
  Iob entity_iob = Iob::O;
  int start = 0;            // byte offset into cleaned document text
  int end = 0;              // exclusive
  std::string dependency;   // dependency relation label, may be empty

  bool operator==(const Token&) const = default;
};

struct Sentence {
  int index = 0;
  std::vector<Token> tokens;

  bool operator==(const Sentence&) const = default;
};

struct Document {
  std::string id;
  std::string cleaned_text;
  std::vector<Sentence> sentences;

  bool operator==(const Document&) const = default;
};

// An index term with its normalized and stemmed token forms.
struct GlossaryTerm {
  std::string raw;                   // as given in the index
  std::vector<std::string> tokens;   // lowercase token texts
  std::vector<std::string> stemmed;  // Porter stems, same length as tokens

  bool operator==(const GlossaryTerm&) const = default;
};

enum class ChunkKind { ENTITY, NOUN_PHRASE, PREDICATE, ADPOSITION };

const char* to_string(ChunkKind kind);

// A contiguous token span inside one sentence.
struct Chunk {
  int sentence_index = 0;
  int first_token = 0;
  int last_token = 0;  // inclusive
  ChunkKind kind = ChunkKind::NOUN_PHRASE;
  std::string label;      // normalized, see normalize_label
  std::string head_stem;  // Porter stem of head token

  bool operator==(const Chunk&) const = default;
};

struct PredicateCandidate {
  Chunk chunk;  // kind PREDICATE or ADPOSITION
  std::vector<std::string> verb_lemmas;
  bool has_trailing_adposition = false;
  std::string trailing_adposition;  // set iff has_trailing_adposition
  std::string label;                // final predicate label

  bool operator==(const PredicateCandidate&) const = default;
};

enum class Phase { POSITIONAL, PREPOSITIONAL, CONTEXT };

const char* to_string(Phase phase);
Phase phase_from_string(const std::string& name);

struct Span {
  int start = 0;
  int end = 0;

  bool operator==(const Span&) const = default;
};

struct Triple {
  std::string subject;    // canonical label
  std::string predicate;  // canonical label
  std::string object;     // canonical label
  std::string document_id;
  int sentence_index = 0;
  Span subject_span;
  Span predicate_span;
  Span object_span;
  Phase phase = Phase::POSITIONAL;

  bool operator==(const Triple&) const = default;
};

struct CorefSubstitution {
  int sentence_index = 0;
  int token_index = 0;
  std::string pronoun;
  std::string antecedent_label;
  int antecedent_sentence = 0;

  bool operator==(const CorefSubstitution&) const = default;
};

}  // namespace textkg
