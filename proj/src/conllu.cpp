#include "textkg/conllu.hpp"

#include <cctype>
#include <sstream>
#include <vector>

namespace textkg {
namespace {

std::vector<std::string> split_tabs(const std::string& line) {
  std::vector<std::string> cols;
  size_t pos = 0;
  while (true) {
    size_t tab = line.find('\t', pos);
    if (tab == std::string::npos) {
      cols.push_back(line.substr(pos));
      break;
    }
    cols.push_back(line.substr(pos, tab - pos));
    pos = tab + 1;
  }
  return cols;
}

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

// MWT ranges ("1-2") and empty nodes ("1.1") are valid input but carry no
// syntactic word of their own.
bool is_skippable_id(const std::string& id) {
  size_t sep = id.find_first_of("-.");
  if (sep == std::string::npos) return false;
  return all_digits(id.substr(0, sep)) && all_digits(id.substr(sep + 1));
}

bool misc_has_no_space(const std::string& misc) {
  size_t pos = 0;
  while (pos <= misc.size()) {
    size_t bar = misc.find('|', pos);
    std::string attr =
        misc.substr(pos, bar == std::string::npos ? std::string::npos : bar - pos);
    if (attr == "SpaceAfter=No") return true;
    if (bar == std::string::npos) break;
    pos = bar + 1;
  }
  return false;
}

std::string unspecified_to_empty(const std::string& col) {
  return col == "_" ? std::string() : col;
}

}  // namespace

Document parse_conllu(const std::string& src, const std::string& document_id) {
  Document doc;
  doc.id = document_id;

  std::vector<Token> current;
  bool no_space_pending = false;
  int cursor = 0;

  auto flush_sentence = [&]() {
    if (current.empty()) return;
    Sentence sent;
    sent.index = static_cast<int>(doc.sentences.size());
    sent.tokens = std::move(current);
    for (size_t t = 0; t < sent.tokens.size(); ++t) {
      sent.tokens[t].sentence_index = sent.index;
      sent.tokens[t].token_index = static_cast<int>(t);
    }
    doc.sentences.push_back(std::move(sent));
    current.clear();
  };

  std::istringstream in(src);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) {
      flush_sentence();
      continue;
    }
    if (line[0] == '#') continue;

    std::vector<std::string> cols = split_tabs(line);
    if (cols.size() != 10)
      throw ConlluError(lineno, "expected 10 tab-separated columns, got " +
                                    std::to_string(cols.size()));
    if (is_skippable_id(cols[0])) continue;
    if (!all_digits(cols[0])) throw ConlluError(lineno, "non-integer ID '" + cols[0] + "'");

    Token tok;
    tok.document_id = document_id;
    tok.word = cols[1];
    tok.lemma = unspecified_to_empty(cols[2]);
    tok.pos = upos_from_string(cols[3]);
    tok.pos_tag = unspecified_to_empty(cols[4]);
    tok.dependency = unspecified_to_empty(cols[7]);

    if (!doc.cleaned_text.empty() && !no_space_pending) {
      doc.cleaned_text += ' ';
      ++cursor;
    }
    tok.start = cursor;
    doc.cleaned_text += tok.word;
    cursor += static_cast<int>(tok.word.size());
    tok.end = cursor;
    no_space_pending = misc_has_no_space(cols[9]);

    current.push_back(std::move(tok));
  }
  flush_sentence();
  return doc;
}

std::string serialize_conllu(const Document& doc) {
  std::string out;
  auto col = [](const std::string& v) { return v.empty() ? std::string("_") : v; };
  for (size_t s = 0; s < doc.sentences.size(); ++s) {
    const Sentence& sent = doc.sentences[s];
    for (size_t t = 0; t < sent.tokens.size(); ++t) {
      const Token& tok = sent.tokens[t];
      // The next token may open the following sentence; SpaceAfter=No has to
      // survive across that boundary for offsets to round-trip.
      const Token* next = nullptr;
      if (t + 1 < sent.tokens.size()) {
        next = &sent.tokens[t + 1];
      } else if (s + 1 < doc.sentences.size() &&
                 !doc.sentences[s + 1].tokens.empty()) {
        next = &doc.sentences[s + 1].tokens.front();
      }
      bool no_space = next != nullptr && tok.end == next->start;
      out += std::to_string(t + 1);
      out += '\t';
      out += tok.word;
      out += '\t';
      out += col(tok.lemma);
      out += '\t';
      out += to_string(tok.pos);
      out += '\t';
      out += col(tok.pos_tag);
      out += "\t_\t_\t";
      out += col(tok.dependency);
      out += "\t_\t";
      out += no_space ? "SpaceAfter=No" : "_";
      out += '\n';
    }
    out += '\n';
  }
  return out;
}

}  // namespace textkg
