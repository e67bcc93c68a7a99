#include "textkg/ingest.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <regex>
#include <sstream>
#include <stdexcept>

#include "textkg/porter.hpp"
#include "textkg/textutil.hpp"

namespace textkg {
namespace {

bool is_word_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) ||
         static_cast<unsigned char>(c) >= 0x80;  // keep UTF-8 continuation bytes
}

bool is_ascii_alpha(char c) { return std::isalpha(static_cast<unsigned char>(c)); }

const std::regex& figure_caption_re() {
  static const std::regex re(R"(^\s*(fig\.|figure)\s*\d.*$)", std::regex::icase);
  return re;
}

}  // namespace

std::string clean_text(const std::string& raw) {
  // Line pass: normalize CRLF, drop figure captions.
  std::vector<std::string> lines;
  {
    std::string cur;
    for (char c : raw) {
      if (c == '\r') continue;
      if (c == '\n') {
        lines.push_back(cur);
        cur.clear();
      } else {
        cur += c;
      }
    }
    lines.push_back(cur);
  }
  std::string joined;
  for (const auto& line : lines) {
    if (std::regex_match(line, figure_caption_re())) continue;
    joined += line;
    joined += '\n';
  }

  // Rejoin hyphenated line wraps: "multi-\nple" -> "multiple". The hyphen is
  // kept when the continuation is not a lowercase letter.
  std::string merged;
  merged.reserve(joined.size());
  for (size_t i = 0; i < joined.size(); ++i) {
    char c = joined[i];
    if (c == '-' && i > 0 && is_ascii_alpha(joined[i - 1])) {
      size_t k = i + 1;
      while (k < joined.size() && (joined[k] == ' ' || joined[k] == '\t')) ++k;
      if (k < joined.size() && joined[k] == '\n') {
        ++k;
        while (k < joined.size() &&
               std::isspace(static_cast<unsigned char>(joined[k])))
          ++k;
        if (k < joined.size() && is_ascii_alpha(joined[k])) {
          if (!std::islower(static_cast<unsigned char>(joined[k]))) merged += '-';
          i = k - 1;
          continue;
        }
      }
    }
    merged += c;
  }

  // Collapse every whitespace run to a single space and trim.
  std::string out;
  out.reserve(merged.size());
  bool in_ws = true;  // drop leading whitespace
  for (char c : merged) {
    if (std::isspace(static_cast<unsigned char>(c))) {
      if (!in_ws) out += ' ';
      in_ws = true;
    } else {
      out += c;
      in_ws = false;
    }
  }
  while (!out.empty() && out.back() == ' ') out.pop_back();
  return out;
}

namespace {

// Scans one word or punctuation token starting at i; returns end offset.
size_t scan_token(const std::string& text, size_t i) {
  if (!is_word_char(text[i])) return i + 1;  // punctuation: single char
  size_t k = i;
  while (k < text.size()) {
    if (is_word_char(text[k])) {
      ++k;
    } else if ((text[k] == '-' || text[k] == '\'') && k + 1 < text.size() &&
               is_word_char(text[k + 1]) && k > i) {
      ++k;  // internal hyphen or apostrophe stays inside the word
    } else {
      break;
    }
  }
  return k;
}

bool is_sentence_terminator(char c) { return c == '.' || c == '?' || c == '!'; }

const std::unordered_set<std::string>& protected_abbreviations() {
  static const std::unordered_set<std::string> abbr = {"e.g", "i.e", "etc", "fig"};
  return abbr;
}

// True when the '.' at `pos` ends a protected abbreviation like "e.g." or
// "Fig." rather than a sentence.
bool abbreviation_before(const std::string& text, size_t pos) {
  size_t b = pos;
  while (b > 0) {
    char c = text[b - 1];
    if (is_word_char(c) || c == '.') {
      --b;
    } else {
      break;
    }
  }
  if (b == pos) return false;
  std::string word = lowercase(text.substr(b, pos - b));
  return protected_abbreviations().count(word) > 0;
}

}  // namespace

Document tokenize(const std::string& cleaned, const std::string& document_id) {
  Document doc;
  doc.id = document_id;
  doc.cleaned_text = cleaned;

  std::vector<std::pair<int, int>> spans;  // current sentence token spans
  auto flush_sentence = [&]() {
    if (spans.empty()) return;
    Sentence sent;
    sent.index = static_cast<int>(doc.sentences.size());
    for (size_t t = 0; t < spans.size(); ++t) {
      Token tok;
      tok.document_id = document_id;
      tok.sentence_index = sent.index;
      tok.token_index = static_cast<int>(t);
      tok.start = spans[t].first;
      tok.end = spans[t].second;
      tok.word = cleaned.substr(static_cast<size_t>(tok.start),
                                static_cast<size_t>(tok.end - tok.start));
      sent.tokens.push_back(std::move(tok));
    }
    doc.sentences.push_back(std::move(sent));
    spans.clear();
  };

  size_t i = 0;
  while (i < cleaned.size()) {
    if (std::isspace(static_cast<unsigned char>(cleaned[i]))) {
      ++i;
      continue;
    }
    size_t end = scan_token(cleaned, i);
    spans.emplace_back(static_cast<int>(i), static_cast<int>(end));
    char c = cleaned[i];
    bool boundary = false;
    if (end == i + 1 && is_sentence_terminator(c)) {
      bool at_break = end >= cleaned.size() ||
                      std::isspace(static_cast<unsigned char>(cleaned[end]));
      if (at_break && (c != '.' || !abbreviation_before(cleaned, i))) boundary = true;
    }
    i = end;
    if (boundary) flush_sentence();
  }
  flush_sentence();
  return doc;
}

std::vector<std::string> tokenize_words(const std::string& text) {
  std::vector<std::string> out;
  size_t i = 0;
  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    size_t end = scan_token(text, i);
    out.push_back(text.substr(i, end - i));
    i = end;
  }
  return out;
}

Lexicon Lexicon::load_files(const std::string& closed_path,
                            const std::string& open_path) {
  auto slurp = [](const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open lexicon file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  };
  return from_text(slurp(closed_path), slurp(open_path));
}

Lexicon Lexicon::from_text(const std::string& closed_src,
                           const std::string& open_src) {
  Lexicon lex;
  lex.add_source(closed_src, "closed");
  lex.add_source(open_src, "open");
  return lex;
}

void Lexicon::add_source(const std::string& src, const std::string& origin) {
  std::istringstream in(src);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string t = strip(line);
    if (t.empty() || t[0] == '#') continue;
    std::vector<std::string> cols;
    size_t pos = 0;
    while (true) {
      size_t tab = t.find('\t', pos);
      if (tab == std::string::npos) {
        cols.push_back(t.substr(pos));
        break;
      }
      cols.push_back(t.substr(pos, tab - pos));
      pos = tab + 1;
    }
    if (cols.size() < 2)
      throw std::runtime_error(origin + " lexicon line " + std::to_string(lineno) +
                               ": expected word<TAB>POS");
    Entry e;
    e.pos = upos_from_string(cols[1]);
    if (cols.size() >= 3) e.lemma = cols[2];
    const std::string word = lowercase(cols[0]);
    // first entry wins so the closed-class list overrides the open one
    entries_.emplace(word, e);
    if (e.pos == Upos::VERB) verb_stems_.insert(e.lemma.empty() ? word : e.lemma);
  }
}

const Lexicon::Entry* Lexicon::find(const std::string& lower_word) const {
  auto it = entries_.find(lower_word);
  return it == entries_.end() ? nullptr : &it->second;
}

bool Lexicon::is_verb_stem(const std::string& lower_word) const {
  return verb_stems_.count(lower_word) > 0;
}

std::string noun_lemma(const std::string& w) {
  if (w.size() > 4 && w.ends_with("ies")) return w.substr(0, w.size() - 3) + "y";
  if (w.size() > 3 && w.ends_with("es")) {
    const std::string stem = w.substr(0, w.size() - 2);
    if (stem.ends_with("s") || stem.ends_with("x") || stem.ends_with("z") ||
        stem.ends_with("ch") || stem.ends_with("sh"))
      return stem;
  }
  if (w.size() > 3 && w.ends_with("s") && !w.ends_with("ss") &&
      !w.ends_with("us") && !w.ends_with("is"))
    return w.substr(0, w.size() - 1);
  return w;
}

namespace {

bool all_punct(const std::string& w) {
  for (char c : w)
    if (is_word_char(c)) return false;
  return !w.empty();
}

std::string verb_lemma(const std::string& w, const Lexicon& lex) {
  struct Strip {
    const char* suffix;
    size_t len;
  };
  static const Strip strips[] = {{"ing", 3}, {"ed", 2}, {"es", 2}, {"s", 1}};
  for (const auto& st : strips) {
    if (w.size() <= st.len + 1 || !w.ends_with(st.suffix)) continue;
    std::string base = w.substr(0, w.size() - st.len);
    if (lex.is_verb_stem(base)) return base;
    if (lex.is_verb_stem(base + "e")) return base + "e";
    if (base.size() >= 2 && base[base.size() - 1] == base[base.size() - 2]) {
      std::string undoubled = base.substr(0, base.size() - 1);
      if (lex.is_verb_stem(undoubled)) return undoubled;
    }
  }
  return w;
}

bool aux_context(const Sentence& sent, size_t idx) {
  for (size_t k = idx; k-- > 0;) {
    const Token& prev = sent.tokens[k];
    if (prev.pos == Upos::ADV) continue;  // "is usually expected"
    if (prev.pos == Upos::AUX) return true;
    if (prev.pos == Upos::VERB &&
        (prev.lemma == "have" || prev.lemma == "do" || prev.lemma == "be"))
      return true;
    return false;
  }
  return false;
}

}  // namespace

Document tag_pos(Document doc, const Lexicon& lexicon) {
  for (auto& sent : doc.sentences) {
    for (size_t i = 0; i < sent.tokens.size(); ++i) {
      Token& tok = sent.tokens[i];
      const std::string lower = lowercase(tok.word);
      if (all_punct(tok.word)) {
        tok.pos = Upos::PUNCT;
        tok.lemma = tok.word;
        continue;
      }
      if (is_numeral(tok.word)) {
        tok.pos = Upos::NUM;
        tok.lemma = tok.word;
        continue;
      }
      if (const Lexicon::Entry* e = lexicon.find(lower)) {
        tok.pos = e->pos;
        if (!e->lemma.empty()) {
          tok.lemma = e->lemma;
        } else if (e->pos == Upos::NOUN) {
          tok.lemma = noun_lemma(lower);
        } else if (e->pos == Upos::VERB) {
          tok.lemma = verb_lemma(lower, lexicon);
        } else {
          tok.lemma = lower;
        }
        continue;
      }
      // suffix rules, then the NOUN default
      if (lower.size() > 3 && lower.ends_with("ly")) {
        tok.pos = Upos::ADV;
        tok.lemma = lower;
      } else if ((lower.ends_with("ing") || lower.ends_with("ed")) &&
                 aux_context(sent, i)) {
        tok.pos = Upos::VERB;
        tok.lemma = verb_lemma(lower, lexicon);
      } else if (lower.ends_with("tion") || lower.ends_with("ment") ||
                 lower.ends_with("ness") || lower.ends_with("tions") ||
                 lower.ends_with("ments")) {
        tok.pos = Upos::NOUN;
        tok.lemma = noun_lemma(lower);
      } else if (lower.ends_with("ize") || lower.ends_with("ify") ||
                 lower.ends_with("izes") || lower.ends_with("ifies") ||
                 lower.ends_with("ized") || lower.ends_with("ified") ||
                 lower.ends_with("izing") || lower.ends_with("ifying")) {
        tok.pos = Upos::VERB;
        tok.lemma = verb_lemma(lower, lexicon);
      } else {
        tok.pos = Upos::NOUN;
        tok.lemma = noun_lemma(lower);
      }
    }
  }
  return doc;
}

std::vector<GlossaryTerm> load_glossary(const std::string& src) {
  std::vector<GlossaryTerm> terms;
  std::unordered_set<std::string> seen;  // stem-sequence keys
  std::istringstream in(src);
  std::string line;
  while (std::getline(in, line)) {
    std::string t = strip(line);
    if (t.empty()) continue;
    GlossaryTerm term;
    term.raw = t;
    for (const auto& w : tokenize_words(lowercase(t))) {
      if (all_punct(w)) continue;
      term.tokens.push_back(w);
    }
    if (term.tokens.empty()) continue;
    term.stemmed = porter_stem_tokens(term.tokens);
    std::string key = join(term.stemmed, "\x1f");
    if (!seen.insert(key).second) continue;
    terms.push_back(std::move(term));
  }
  std::sort(terms.begin(), terms.end(),
            [](const GlossaryTerm& a, const GlossaryTerm& b) {
              if (a.tokens.size() != b.tokens.size())
                return a.tokens.size() > b.tokens.size();
              return join(a.tokens, " ") < join(b.tokens, " ");
            });
  return terms;
}

}  // namespace textkg
