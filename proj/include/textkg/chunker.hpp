// Phrase chunking: noun-phrase detection, the fixpoint merge rules and
// glossary-driven entity tagging.
#pragma once

#include <string>
#include <vector>

#include "textkg/types.hpp"

namespace textkg {

/// Maximal spans matching DET? (ADJ|NOUN|PROPN)* (NOUN|PROPN). Leading
/// determiners stay inside the span but are excluded from the label.
std::vector<Chunk> chunk_noun_phrases(const Sentence& sentence);

/// Repeats the merge rules until a fixpoint, in a fixed per-pass order:
/// parenthesized NP absorption, NP+of+NP, adjacent NPs, verb-group
/// formation, standalone adpositions between noun chunks.
std::vector<Chunk> apply_merge_rules(const Sentence& sentence,
                                     std::vector<Chunk> chunks);

/// Marks a NOUN_PHRASE as ENTITY when its stemmed label tokens contain some
/// glossary term's stem sequence; the longest term wins.
std::vector<Chunk> tag_entities(std::vector<Chunk> chunks,
                                const std::vector<GlossaryTerm>& glossary);

/// Writes B/I entity marks onto the tokens covered by ENTITY chunks.
void annotate_entity_tokens(Sentence& sentence, const std::vector<Chunk>& chunks);

/// Canonical label: lowercased, leading determiners and possessive markers
/// dropped, hyphens kept, single-space joined. Throws std::invalid_argument
/// when nothing remains.
std::string normalize_label(const std::vector<std::string>& tokens);

/// The concatenated rendering ("multiple sequences of moves" ->
/// "multiplesequencesofmoves").
std::string squash_label(const std::string& label);

}  // namespace textkg
