// Triple assembly (positional and prepositional), filtering, lemmatization
// and the optional context augmentation.
#pragma once

#include <string>
#include <unordered_set>
#include <vector>

#include "textkg/types.hpp"

namespace textkg {

/// One triple per PREDICATE candidate whose nearest noun chunk exists on
/// both sides.
std::vector<Triple> assemble_positional(const Sentence& sentence,
                                        const std::vector<Chunk>& chunks,
                                        const std::vector<PredicateCandidate>& predicates);

/// The adpositions used as phase-II relation labels (configurable).
const std::vector<std::string>& default_adpositions();

/// Adposition-centered triples: (left entity, adposition, right entity) for
/// every ADPOSITION chunk between noun chunks, plus links from phase-I
/// objects to an immediately following adposition + entity. Duplicates from
/// the two routes collapse.
std::vector<Triple> assemble_prepositional(const Sentence& sentence,
                                           const std::vector<Chunk>& chunks,
                                           const std::vector<Triple>& positional,
                                           const std::vector<std::string>& adpositions);

std::unordered_set<std::string> load_stopwords(const std::string& path);
std::unordered_set<std::string> parse_stopwords(const std::string& src);

/// Drops triples whose subject or object is made up entirely of stop-listed
/// tokens, or contains a figure/table reference. Predicates are exempt.
std::vector<Triple> filter_stopwords(const std::vector<Triple>& triples,
                                     const std::unordered_set<std::string>& stoplist);

/// Keeps triples whose stemmed subject or object contains some glossary
/// term's stem sequence.
std::vector<Triple> filter_by_glossary(const std::vector<Triple>& triples,
                                       const std::vector<GlossaryTerm>& glossary);

/// Token-wise plural normalization of one label (irregular table plus a
/// conservative -s strip).
std::string lemmatize_label(const std::string& label);

/// Lemmatizes subject/object labels and drops exact duplicates, keeping the
/// earliest provenance.
std::vector<Triple> lemmatize_triples(std::vector<Triple> triples);

/// For each kept triple, pulls in the immediately following triple of the
/// full document-ordered list when its subject equals the kept object.
std::vector<Triple> augment_context(const std::vector<Triple>& all_triples,
                                    const std::vector<Triple>& kept);

/// Labels in the concatenated rendering used by the printed examples.
Triple squash_triple(Triple t);

}  // namespace textkg
