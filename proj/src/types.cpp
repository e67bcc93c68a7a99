#include "textkg/types.hpp"

#include <unordered_map>

namespace textkg {

const char* to_string(Upos pos) {
  switch (pos) {
    case Upos::ADJ: return "ADJ";
    case Upos::ADP: return "ADP";
    case Upos::ADV: return "ADV";
    case Upos::AUX: return "AUX";
    case Upos::CCONJ: return "CCONJ";
    case Upos::DET: return "DET";
    case Upos::INTJ: return "INTJ";
    case Upos::NOUN: return "NOUN";
    case Upos::NUM: return "NUM";
    case Upos::PART: return "PART";
    case Upos::PRON: return "PRON";
    case Upos::PROPN: return "PROPN";
    case Upos::PUNCT: return "PUNCT";
    case Upos::SCONJ: return "SCONJ";
    case Upos::SYM: return "SYM";
    case Upos::VERB: return "VERB";
    case Upos::X: return "X";
  }
  return "X";
}

Upos upos_from_string(const std::string& tag) {
  static const std::unordered_map<std::string, Upos> table = {
      {"ADJ", Upos::ADJ},     {"ADP", Upos::ADP},   {"ADV", Upos::ADV},
      {"AUX", Upos::AUX},     {"CCONJ", Upos::CCONJ}, {"DET", Upos::DET},
      {"INTJ", Upos::INTJ},   {"NOUN", Upos::NOUN}, {"NUM", Upos::NUM},
      {"PART", Upos::PART},   {"PRON", Upos::PRON}, {"PROPN", Upos::PROPN},
      {"PUNCT", Upos::PUNCT}, {"SCONJ", Upos::SCONJ}, {"SYM", Upos::SYM},
      {"VERB", Upos::VERB},   {"X", Upos::X},
  };
  auto it = table.find(tag);
  return it == table.end() ? Upos::X : it->second;
}

const char* to_string(ChunkKind kind) {
  switch (kind) {
    case ChunkKind::ENTITY: return "ENTITY";
    case ChunkKind::NOUN_PHRASE: return "NOUN_PHRASE";
    case ChunkKind::PREDICATE: return "PREDICATE";
    case ChunkKind::ADPOSITION: return "ADPOSITION";
  }
  return "NOUN_PHRASE";
}

const char* to_string(Phase phase) {
  switch (phase) {
    case Phase::POSITIONAL: return "positional";
    case Phase::PREPOSITIONAL: return "prepositional";
    case Phase::CONTEXT: return "context";
  }
  return "positional";
}

Phase phase_from_string(const std::string& name) {
  if (name == "prepositional") return Phase::PREPOSITIONAL;
  if (name == "context") return Phase::CONTEXT;
  return Phase::POSITIONAL;
}

}  // namespace textkg
