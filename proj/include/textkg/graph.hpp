// Knowledge-graph construction, per-entity subgraphs and DOT/JSONL export.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "textkg/types.hpp"

namespace textkg {

// Directed multigraph over lemmatized entity labels.
struct KnowledgeGraph {
  struct Edge {
    std::string source;
    std::string target;
    std::string predicate;
    std::string document_id;
    int sentence_index = 0;

    bool operator==(const Edge&) const = default;
  };

  std::vector<std::string> nodes;  // insertion order, no duplicates
  std::vector<Edge> edges;

  bool has_node(const std::string& label) const;
  bool operator==(const KnowledgeGraph&) const = default;
};

/// One node per distinct label, one edge per triple (subject -> object).
KnowledgeGraph build_graph(const std::vector<Triple>& triples);

/// Graph induced by the edges incident to the entity; the query label is
/// lemmatized before lookup. nullopt when the entity is not a node.
std::optional<KnowledgeGraph> entity_subgraph(const KnowledgeGraph& kg,
                                              const std::string& entity);

/// Deterministic DOT rendering: nodes sorted lexicographically, edges in
/// insertion order.
std::string export_dot(const KnowledgeGraph& kg);

/// One JSON object per triple, stable field order, trailing newline per line.
std::string export_jsonl(const std::vector<Triple>& triples);

std::vector<Triple> parse_jsonl(const std::string& src);

}  // namespace textkg
