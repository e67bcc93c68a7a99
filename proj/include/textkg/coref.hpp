// Rule-based pronoun resolution: nearest preceding noun span, glossary
// preference, bounded sentence window.
#pragma once

#include <utility>
#include <vector>

#include "textkg/types.hpp"

namespace textkg {

struct CorefOptions {
  int window = 2;  // how many earlier sentences to search
};

struct CorefResult {
  Document document;
  std::vector<CorefSubstitution> substitutions;
};

/// Rewrites resolvable pronouns in place (word and lemma) to their
/// antecedent's surface label. Pronouns without a candidate are left alone.
CorefResult resolve_coreferences(Document doc,
                                 const std::vector<GlossaryTerm>& glossary,
                                 const CorefOptions& options = {});

}  // namespace textkg
