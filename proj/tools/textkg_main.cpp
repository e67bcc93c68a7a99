// textkg command line: extract / entity / eval / tag / clean.
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include <CLI11.hpp>
#include <json.hpp>

#include "textkg/conllu.hpp"
#include "textkg/eval.hpp"
#include "textkg/graph.hpp"
#include "textkg/ingest.hpp"
#include "textkg/pipeline.hpp"
#include "textkg/triples.hpp"

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void emit(const std::string& out_path, const std::string& content) {
  if (out_path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write file: " + out_path);
  out << content;
}

void print_summary(const textkg::RunSummary& summary) {
  const auto& c = summary.counts;
  std::cout << "sentences              " << c.sentences << "\n"
            << "tokens                 " << c.tokens << "\n"
            << "coref substitutions    " << c.coref_substitutions << "\n"
            << "noun phrase chunks     " << c.noun_phrase_chunks << "\n"
            << "chunks after merge     " << c.chunks_after_merge << "\n"
            << "entity chunks          " << c.entity_chunks << "\n"
            << "predicate candidates   " << c.predicate_candidates << "\n"
            << "positional triples     " << c.positional << "\n"
            << "prepositional triples  " << c.prepositional << "\n"
            << "combined               " << c.combined << "\n"
            << "after stop-word filter " << c.after_stopword_filter << "\n"
            << "after glossary filter  " << c.after_glossary_filter << "\n"
            << "context added          " << c.context_added << "\n"
            << "final triples          " << c.final_triples << "\n";
  if (!summary.triples_path.empty())
    std::cout << "wrote " << summary.triples_path << ", " << summary.dot_path
              << ", " << summary.summary_path << "\n";
}

int run_extract(const textkg::PipelineConfig& config) {
  auto summary = textkg::run_pipeline(config);
  for (const auto& w : summary.warnings) std::cerr << "warning: " << w << "\n";
  print_summary(summary);
  return 0;
}

int run_entity(const std::string& triples_path, const std::string& entity,
               const std::string& out_path) {
  const auto triples = textkg::parse_jsonl(slurp(triples_path));
  const auto kg = textkg::build_graph(triples);
  const auto sub = textkg::entity_subgraph(kg, entity);
  if (!sub) {
    std::cerr << "entity not found: " << entity << "\n";
    return 2;
  }
  emit(out_path, textkg::export_dot(*sub));
  return 0;
}

int run_eval(const std::string& triples_path, const std::string& gold_path,
             const std::string& out_path) {
  std::unordered_set<std::string> emitted;
  for (const auto& t : textkg::parse_jsonl(slurp(triples_path)))
    emitted.insert(t.subject + '\x1f' + t.predicate + '\x1f' + t.object);

  std::vector<int> gold;
  std::vector<int> predicted;
  std::istringstream in(slurp(gold_path));
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    const auto j = nlohmann::json::parse(line);
    gold.push_back(j.at("gold").get<int>());
    if (j.contains("predicted")) {
      predicted.push_back(j["predicted"].get<int>());
    } else {
      // the system asserts every emitted triple is a relation
      const std::string key = j.at("subject").get<std::string>() + '\x1f' +
                              j.at("predicate").get<std::string>() + '\x1f' +
                              j.at("object").get<std::string>();
      predicted.push_back(emitted.count(key) ? 1 : 0);
    }
  }
  const auto metrics = textkg::classification_report(gold, predicted);
  std::cout << textkg::format_report(metrics);
  if (!out_path.empty()) emit(out_path, textkg::metrics_to_json(metrics));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"textbook text + glossary -> subject/predicate/object triples "
               "and knowledge graphs"};
  app.require_subcommand(1);
  if (const char* cfg = std::getenv("TEXTKG_CONFIG"); cfg && *cfg)
    app.set_config("--config", cfg);
  else
    app.set_config("--config");

  textkg::PipelineConfig config;
  std::string adpositions_csv;

  auto* extract = app.add_subcommand("extract", "run the full pipeline");
  extract->add_option("-i,--input", config.input_path, "input file")->required();
  extract->add_option("-f,--format", config.input_format, "text|conllu")
      ->check(CLI::IsMember({"text", "conllu"}))
      ->capture_default_str();
  extract->add_option("-g,--glossary", config.glossary_path, "glossary file")
      ->required();
  extract->add_option("-o,--out-dir", config.output_dir, "output directory")
      ->capture_default_str();
  extract->add_option("--data-dir", config.data_dir,
                      "lexicon/stopword directory (default: TEXTKG_DATA_DIR "
                      "or the bundled data)");
  extract->add_option("--coref-window", config.coref_window,
                      "sentences searched backwards for antecedents")
      ->capture_default_str();
  extract->add_option("--adpositions", adpositions_csv,
                      "comma-separated phase-II adposition list");
  extract->add_flag("--squash", config.squash,
                    "render labels without spaces");
  extract->add_flag("--context", config.context,
                    "add follow-up context triples (off by default)");
  extract->add_flag("--debug-coref", config.debug_coref, "write coref.jsonl");
  extract->add_flag("--debug-chunks", config.debug_chunks, "write chunks.jsonl");
  extract->add_flag("--debug-predicates", config.debug_predicates,
                    "write predicates.jsonl");

  std::string triples_path;
  std::string entity_label;
  std::string out_path;
  auto* entity = app.add_subcommand("entity",
                                    "DOT subgraph for one entity from a "
                                    "triples.jsonl file");
  entity->add_option("triples", triples_path, "triples.jsonl path")->required();
  entity->add_option("label", entity_label, "entity label")->required();
  entity->add_option("-o,--out", out_path, "output file (default stdout)");

  std::string gold_path;
  auto* eval = app.add_subcommand("eval", "classification report over gold labels");
  eval->add_option("--triples", triples_path, "triples.jsonl path")->required();
  eval->add_option("--gold", gold_path, "gold labels jsonl")->required();
  eval->add_option("-o,--out", out_path, "metrics json output");

  std::string input_path;
  auto* tag = app.add_subcommand("tag", "raw text -> CoNLL-U via the built-in tagger");
  tag->add_option("-i,--input", input_path, "input text file")->required();
  tag->add_option("--data-dir", config.data_dir, "lexicon directory");
  tag->add_option("-o,--out", out_path, "output file (default stdout)");

  auto* clean = app.add_subcommand("clean", "normalize raw text");
  clean->add_option("-i,--input", input_path, "input text file")->required();
  clean->add_option("-o,--out", out_path, "output file (default stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (extract->parsed()) {
      if (!adpositions_csv.empty()) {
        config.adpositions.clear();
        std::istringstream ss(adpositions_csv);
        std::string item;
        while (std::getline(ss, item, ','))
          if (!item.empty()) config.adpositions.push_back(item);
      }
      return run_extract(config);
    }
    if (entity->parsed()) return run_entity(triples_path, entity_label, out_path);
    if (eval->parsed()) return run_eval(triples_path, gold_path, out_path);
    if (tag->parsed()) {
      const std::string data_dir = textkg::resolve_data_dir(config);
      const auto lexicon = textkg::Lexicon::load_files(
          data_dir + "/lexicon_closed.tsv", data_dir + "/lexicon_open.tsv");
      const std::string cleaned = textkg::clean_text(slurp(input_path));
      const auto doc =
          textkg::tag_pos(textkg::tokenize(cleaned, "doc"), lexicon);
      emit(out_path, textkg::serialize_conllu(doc));
      return 0;
    }
    if (clean->parsed()) {
      emit(out_path, textkg::clean_text(slurp(input_path)) + "\n");
      return 0;
    }
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 1;
  }
  return 0;
}
