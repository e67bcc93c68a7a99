// Predicate extraction from chunked sentences.
#pragma once

#include <vector>

#include "textkg/types.hpp"

namespace textkg {

/// One candidate per PREDICATE chunk (an immediately following unchunked
/// adposition is absorbed into the label) plus one per ADPOSITION chunk.
/// Modal auxiliaries are dropped from the label only when the predicate
/// carries a trailing adposition. Order follows chunk position.
std::vector<PredicateCandidate> extract_predicates(const Sentence& sentence,
                                                   const std::vector<Chunk>& chunks);

bool is_modal(const std::string& lower_word);

}  // namespace textkg
