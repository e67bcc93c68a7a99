#include "textkg/graph.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_set>

#include <json.hpp>

#include "textkg/textutil.hpp"
#include "textkg/triples.hpp"

namespace textkg {

bool KnowledgeGraph::has_node(const std::string& label) const {
  return std::find(nodes.begin(), nodes.end(), label) != nodes.end();
}

KnowledgeGraph build_graph(const std::vector<Triple>& triples) {
  KnowledgeGraph kg;
  std::unordered_set<std::string> known;
  auto add_node = [&](const std::string& label) {
    if (known.insert(label).second) kg.nodes.push_back(label);
  };
  for (const auto& t : triples) {
    add_node(t.subject);
    add_node(t.object);
    kg.edges.push_back(KnowledgeGraph::Edge{t.subject, t.object, t.predicate,
                                            t.document_id, t.sentence_index});
  }
  return kg;
}

std::optional<KnowledgeGraph> entity_subgraph(const KnowledgeGraph& kg,
                                              const std::string& entity) {
  const std::string key = lemmatize_label(lowercase(entity));
  if (!kg.has_node(key)) return std::nullopt;

  KnowledgeGraph sub;
  std::unordered_set<std::string> known;
  auto add_node = [&](const std::string& label) {
    if (known.insert(label).second) sub.nodes.push_back(label);
  };
  for (const auto& e : kg.edges) {
    if (e.source != key && e.target != key) continue;
    add_node(e.source);
    add_node(e.target);
    sub.edges.push_back(e);
  }
  return sub;
}

namespace {

std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace

std::string export_dot(const KnowledgeGraph& kg) {
  std::string out = "digraph kg {\n";
  std::vector<std::string> nodes = kg.nodes;
  std::sort(nodes.begin(), nodes.end());
  for (const auto& n : nodes) {
    out += "  ";
    out += dot_quote(n);
    out += ";\n";
  }
  for (const auto& e : kg.edges) {
    out += "  ";
    out += dot_quote(e.source);
    out += " -> ";
    out += dot_quote(e.target);
    out += " [label=";
    out += dot_quote(e.predicate);
    out += "];\n";
  }
  out += "}\n";
  return out;
}

std::string export_jsonl(const std::vector<Triple>& triples) {
  std::string out;
  for (const auto& t : triples) {
    nlohmann::ordered_json j;
    j["subject"] = t.subject;
    j["predicate"] = t.predicate;
    j["object"] = t.object;
    j["phase"] = to_string(t.phase);
    j["document_id"] = t.document_id;
    j["sentence_index"] = t.sentence_index;
    j["subject_span"] = {t.subject_span.start, t.subject_span.end};
    j["predicate_span"] = {t.predicate_span.start, t.predicate_span.end};
    j["object_span"] = {t.object_span.start, t.object_span.end};
    out += j.dump();
    out += '\n';
  }
  return out;
}

std::vector<Triple> parse_jsonl(const std::string& src) {
  std::vector<Triple> out;
  std::istringstream in(src);
  std::string line;
  while (std::getline(in, line)) {
    if (strip(line).empty()) continue;
    const auto j = nlohmann::json::parse(line);
    Triple t;
    t.subject = j.at("subject").get<std::string>();
    t.predicate = j.at("predicate").get<std::string>();
    t.object = j.at("object").get<std::string>();
    t.phase = phase_from_string(j.value("phase", "positional"));
    t.document_id = j.value("document_id", "");
    t.sentence_index = j.value("sentence_index", 0);
    auto span = [&](const char* field, Span& s) {
      if (j.contains(field) && j[field].is_array() && j[field].size() == 2) {
        s.start = j[field][0].get<int>();
        s.end = j[field][1].get<int>();
      }
    };
    span("subject_span", t.subject_span);
    span("predicate_span", t.predicate_span);
    span("object_span", t.object_span);
    out.push_back(std::move(t));
  }
  return out;
}

}  // namespace textkg
