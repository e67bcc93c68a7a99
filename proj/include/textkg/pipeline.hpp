// End-to-end orchestration of the extraction pipeline plus the file outputs
// behind the CLI.
#pragma once

#include <string>
#include <vector>

#include "textkg/types.hpp"

namespace textkg {

struct PipelineConfig {
  std::string input_path;
  std::string input_format = "text";  // "text" | "conllu"
  std::string glossary_path;
  std::string output_dir = ".";
  std::string data_dir;  // lexicons + stopwords; empty -> env/default
  int coref_window = 2;
  std::vector<std::string> adpositions;  // empty -> default list
  bool squash = false;
  bool context = false;  // off by default
  bool debug_coref = false;
  bool debug_chunks = false;
  bool debug_predicates = false;
  bool write_outputs = true;
};

struct StageCounts {
  long sentences = 0;
  long tokens = 0;
  long coref_substitutions = 0;
  long noun_phrase_chunks = 0;
  long chunks_after_merge = 0;
  long entity_chunks = 0;
  long predicate_candidates = 0;
  long positional = 0;
  long prepositional = 0;
  long combined = 0;
  long after_stopword_filter = 0;
  long after_glossary_filter = 0;
  long context_added = 0;
  long final_triples = 0;
};

struct RunSummary {
  StageCounts counts;
  std::vector<CorefSubstitution> substitutions;
  std::vector<Triple> triples;  // final, as rendered (squash applied if set)
  std::vector<std::string> warnings;
  std::string triples_path;
  std::string dot_path;
  std::string summary_path;
};

/// Resolves the bundled-data directory: explicit config value, then the
/// TEXTKG_DATA_DIR environment variable, then the built-in default.
std::string resolve_data_dir(const PipelineConfig& config);

/// clean -> ingest/tag -> coref -> chunk -> entities -> predicates ->
/// phase I -> phase II -> stop-word filter -> glossary filter ->
/// [context] -> lemmatize/dedup -> outputs. Deterministic for a fixed
/// config.
RunSummary run_pipeline(const PipelineConfig& config);

}  // namespace textkg
