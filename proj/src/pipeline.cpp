#include "textkg/pipeline.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "textkg/chunker.hpp"
#include "textkg/conllu.hpp"
#include "textkg/coref.hpp"
#include "textkg/graph.hpp"
#include "textkg/ingest.hpp"
#include "textkg/relations.hpp"
#include "textkg/triples.hpp"

#ifndef TEXTKG_DEFAULT_DATA_DIR
#define TEXTKG_DEFAULT_DATA_DIR "data"
#endif

namespace textkg {
namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open input file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write output file: " + path);
  out << content;
}

std::string document_id_from_path(const std::string& path) {
  std::filesystem::path p(path);
  std::string stem = p.stem().string();
  return stem.empty() ? "doc" : stem;
}

}  // namespace

std::string resolve_data_dir(const PipelineConfig& config) {
  if (!config.data_dir.empty()) return config.data_dir;
  if (const char* env = std::getenv("TEXTKG_DATA_DIR"); env && *env) return env;
  return TEXTKG_DEFAULT_DATA_DIR;
}

RunSummary run_pipeline(const PipelineConfig& config) {
  RunSummary summary;

  const std::string data_dir = resolve_data_dir(config);
  const Lexicon lexicon = Lexicon::load_files(data_dir + "/lexicon_closed.tsv",
                                              data_dir + "/lexicon_open.tsv");
  const auto stoplist = load_stopwords(data_dir + "/stopwords_en.txt");

  // ingest
  Document doc;
  if (config.input_format == "conllu") {
    doc = parse_conllu(slurp(config.input_path),
                       document_id_from_path(config.input_path));
  } else if (config.input_format == "text") {
    const std::string cleaned = clean_text(slurp(config.input_path));
    doc = tag_pos(tokenize(cleaned, document_id_from_path(config.input_path)),
                  lexicon);
  } else {
    throw std::runtime_error("unknown input format: " + config.input_format);
  }

  const auto glossary = load_glossary(slurp(config.glossary_path));
  if (glossary.empty())
    summary.warnings.push_back(
        "glossary is empty; the glossary filter will drop every triple");

  summary.counts.sentences = static_cast<long>(doc.sentences.size());
  for (const auto& s : doc.sentences)
    summary.counts.tokens += static_cast<long>(s.tokens.size());

  // coreference
  CorefOptions coref_options;
  coref_options.window = config.coref_window;
  CorefResult coref = resolve_coreferences(std::move(doc), glossary, coref_options);
  doc = std::move(coref.document);
  summary.substitutions = std::move(coref.substitutions);
  summary.counts.coref_substitutions = static_cast<long>(summary.substitutions.size());

  const auto& adpositions =
      config.adpositions.empty() ? default_adpositions() : config.adpositions;

  // chunk / predicates / assembly, per sentence
  std::vector<Triple> combined;
  nlohmann::ordered_json chunks_debug = nlohmann::ordered_json::array();
  nlohmann::ordered_json predicates_debug = nlohmann::ordered_json::array();
  for (auto& sentence : doc.sentences) {
    auto chunks = chunk_noun_phrases(sentence);
    summary.counts.noun_phrase_chunks += static_cast<long>(chunks.size());
    chunks = apply_merge_rules(sentence, std::move(chunks));
    chunks = tag_entities(std::move(chunks), glossary);
    annotate_entity_tokens(sentence, chunks);
    summary.counts.chunks_after_merge += static_cast<long>(chunks.size());
    for (const auto& c : chunks)
      if (c.kind == ChunkKind::ENTITY) ++summary.counts.entity_chunks;

    const auto predicates = extract_predicates(sentence, chunks);
    summary.counts.predicate_candidates += static_cast<long>(predicates.size());

    auto positional = assemble_positional(sentence, chunks, predicates);
    auto prepositional =
        assemble_prepositional(sentence, chunks, positional, adpositions);
    summary.counts.positional += static_cast<long>(positional.size());
    summary.counts.prepositional += static_cast<long>(prepositional.size());

    // document order within the sentence follows predicate position
    std::vector<Triple> sentence_triples = std::move(positional);
    sentence_triples.insert(sentence_triples.end(), prepositional.begin(),
                            prepositional.end());
    std::stable_sort(sentence_triples.begin(), sentence_triples.end(),
                     [](const Triple& a, const Triple& b) {
                       return a.predicate_span.start < b.predicate_span.start;
                     });
    combined.insert(combined.end(), sentence_triples.begin(), sentence_triples.end());

    if (config.debug_chunks) {
      nlohmann::ordered_json row;
      row["sentence"] = sentence.index;
      auto arr = nlohmann::ordered_json::array();
      for (const auto& c : chunks)
        arr.push_back({{"first", c.first_token},
                       {"last", c.last_token},
                       {"kind", to_string(c.kind)},
                       {"label", c.label}});
      row["chunks"] = arr;
      chunks_debug.push_back(row);
    }
    if (config.debug_predicates) {
      for (const auto& p : predicates) {
        nlohmann::ordered_json row;
        row["sentence"] = sentence.index;
        row["label"] = p.label;
        row["kind"] = to_string(p.chunk.kind);
        row["verb_lemmas"] = p.verb_lemmas;
        if (p.has_trailing_adposition)
          row["trailing_adposition"] = p.trailing_adposition;
        predicates_debug.push_back(row);
      }
    }
  }
  summary.counts.combined = static_cast<long>(combined.size());

  // filters
  auto kept = filter_stopwords(combined, stoplist);
  summary.counts.after_stopword_filter = static_cast<long>(kept.size());
  kept = filter_by_glossary(kept, glossary);
  summary.counts.after_glossary_filter = static_cast<long>(kept.size());

  if (config.context) {
    auto with_context = augment_context(combined, kept);
    summary.counts.context_added =
        static_cast<long>(with_context.size() - kept.size());
    kept = std::move(with_context);
  }

  auto final_triples = lemmatize_triples(std::move(kept));
  summary.counts.final_triples = static_cast<long>(final_triples.size());

  if (config.squash) {
    for (auto& t : final_triples) t = squash_triple(std::move(t));
  }
  summary.triples = final_triples;

  if (config.write_outputs) {
    std::filesystem::create_directories(config.output_dir);
    const std::string base = config.output_dir + "/";
    summary.triples_path = base + "triples.jsonl";
    write_file(summary.triples_path, export_jsonl(final_triples));
    summary.dot_path = base + "kg.dot";
    write_file(summary.dot_path, export_dot(build_graph(final_triples)));

    nlohmann::ordered_json js;
    js["document"] = document_id_from_path(config.input_path);
    js["sentences"] = summary.counts.sentences;
    js["tokens"] = summary.counts.tokens;
    js["coref_substitutions"] = summary.counts.coref_substitutions;
    js["noun_phrase_chunks"] = summary.counts.noun_phrase_chunks;
    js["chunks_after_merge"] = summary.counts.chunks_after_merge;
    js["entity_chunks"] = summary.counts.entity_chunks;
    js["predicate_candidates"] = summary.counts.predicate_candidates;
    js["positional"] = summary.counts.positional;
    js["prepositional"] = summary.counts.prepositional;
    js["combined"] = summary.counts.combined;
    js["after_stopword_filter"] = summary.counts.after_stopword_filter;
    js["after_glossary_filter"] = summary.counts.after_glossary_filter;
    js["context_added"] = summary.counts.context_added;
    js["final_triples"] = summary.counts.final_triples;
    summary.summary_path = base + "summary.json";
    write_file(summary.summary_path, js.dump(2) + "\n");

    if (config.debug_coref) {
      std::string log;
      for (const auto& sub : summary.substitutions) {
        nlohmann::ordered_json row;
        row["sentence"] = sub.sentence_index;
        row["token"] = sub.token_index;
        row["pronoun"] = sub.pronoun;
        row["antecedent"] = sub.antecedent_label;
        row["antecedent_sentence"] = sub.antecedent_sentence;
        log += row.dump();
        log += '\n';
      }
      write_file(base + "coref.jsonl", log);
    }
    if (config.debug_chunks) {
      std::string log;
      for (const auto& row : chunks_debug) {
        log += row.dump();
        log += '\n';
      }
      write_file(base + "chunks.jsonl", log);
    }
    if (config.debug_predicates) {
      std::string log;
      for (const auto& row : predicates_debug) {
        log += row.dump();
        log += '\n';
      }
      write_file(base + "predicates.jsonl", log);
    }
  }
  return summary;
}

}  // namespace textkg
