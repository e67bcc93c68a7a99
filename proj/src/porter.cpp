// Porter stemmer, matching the reference implementation that produced the
// published sample vocabulary (including its bli->ble and logi->log rules
// and the length<=2 short circuit).
#include "textkg/porter.hpp"

#include <cctype>

namespace textkg {
namespace {

struct Stemmer {
  std::string b;  // working buffer
  int k = 0;      // index of last letter in the current word
  int j = 0;      // general suffix cursor

  bool cons(int i) const {
    switch (b[static_cast<size_t>(i)]) {
      case 'a': case 'e': case 'i': case 'o': case 'u':
        return false;
      case 'y':
        return i == 0 ? true : !cons(i - 1);
      default:
        return true;
    }
  }

  // Number of vowel-consonant sequences in b[0..j].
  int m() const {
    int n = 0;
    int i = 0;
    while (true) {
      if (i > j) return n;
      if (!cons(i)) break;
      ++i;
    }
    ++i;
    while (true) {
      while (true) {
        if (i > j) return n;
        if (cons(i)) break;
        ++i;
      }
      ++i;
      ++n;
      while (true) {
        if (i > j) return n;
        if (!cons(i)) break;
        ++i;
      }
      ++i;
    }
  }

  bool vowel_in_stem() const {
    for (int i = 0; i <= j; ++i)
      if (!cons(i)) return true;
    return false;
  }

  bool doublec(int at) const {
    if (at < 1) return false;
    if (b[static_cast<size_t>(at)] != b[static_cast<size_t>(at - 1)]) return false;
    return cons(at);
  }

  // consonant-vowel-consonant ending at i, second consonant not w/x/y
  bool cvc(int i) const {
    if (i < 2 || !cons(i) || cons(i - 1) || !cons(i - 2)) return false;
    char ch = b[static_cast<size_t>(i)];
    return ch != 'w' && ch != 'x' && ch != 'y';
  }

  bool ends(const char* s, int length) {
    if (length > k + 1) return false;
    if (b.compare(static_cast<size_t>(k - length + 1), static_cast<size_t>(length), s) != 0)
      return false;
    j = k - length;
    return true;
  }

  void setto(const char* s, int length) {
    b.replace(static_cast<size_t>(j + 1), b.size() - static_cast<size_t>(j + 1), s,
              static_cast<size_t>(length));
    k = j + length;
  }

  void r(const char* s, int length) {
    if (m() > 0) setto(s, length);
  }

  void step1ab() {
    if (b[static_cast<size_t>(k)] == 's') {
      if (ends("sses", 4)) {
        k -= 2;
      } else if (ends("ies", 3)) {
        setto("i", 1);
      } else if (b[static_cast<size_t>(k - 1)] != 's') {
        --k;
      }
    }
    if (ends("eed", 3)) {
      if (m() > 0) --k;
    } else if ((ends("ed", 2) || ends("ing", 3)) && vowel_in_stem()) {
      k = j;
      if (ends("at", 2)) {
        setto("ate", 3);
      } else if (ends("bl", 2)) {
        setto("ble", 3);
      } else if (ends("iz", 2)) {
        setto("ize", 3);
      } else if (doublec(k)) {
        --k;
        char ch = b[static_cast<size_t>(k)];
        if (ch == 'l' || ch == 's' || ch == 'z') ++k;
      } else if (m() == 1 && cvc(k)) {
        setto("e", 1);
      }
    }
  }

  void step1c() {
    if (ends("y", 1) && vowel_in_stem()) b[static_cast<size_t>(k)] = 'i';
  }

  void step2() {
    switch (b[static_cast<size_t>(k - 1)]) {
      case 'a':
        if (ends("ational", 7)) { r("ate", 3); break; }
        if (ends("tional", 6)) { r("tion", 4); break; }
        break;
      case 'c':
        if (ends("enci", 4)) { r("ence", 4); break; }
        if (ends("anci", 4)) { r("ance", 4); break; }
        break;
      case 'e':
        if (ends("izer", 4)) { r("ize", 3); break; }
        break;
      case 'l':
        if (ends("bli", 3)) { r("ble", 3); break; }
        if (ends("alli", 4)) { r("al", 2); break; }
        if (ends("entli", 5)) { r("ent", 3); break; }
        if (ends("eli", 3)) { r("e", 1); break; }
        if (ends("ousli", 5)) { r("ous", 3); break; }
        break;
      case 'o':
        if (ends("ization", 7)) { r("ize", 3); break; }
        if (ends("ation", 5)) { r("ate", 3); break; }
        if (ends("ator", 4)) { r("ate", 3); break; }
        break;
      case 's':
        if (ends("alism", 5)) { r("al", 2); break; }
        if (ends("iveness", 7)) { r("ive", 3); break; }
        if (ends("fulness", 7)) { r("ful", 3); break; }
        if (ends("ousness", 7)) { r("ous", 3); break; }
        break;
      case 't':
        if (ends("aliti", 5)) { r("al", 2); break; }
        if (ends("iviti", 5)) { r("ive", 3); break; }
        if (ends("biliti", 6)) { r("ble", 3); break; }
        break;
      case 'g':
        if (ends("logi", 4)) { r("log", 3); break; }
        break;
    }
  }

  void step3() {
    switch (b[static_cast<size_t>(k)]) {
      case 'e':
        if (ends("icate", 5)) { r("ic", 2); break; }
        if (ends("ative", 5)) { r("", 0); break; }
        if (ends("alize", 5)) { r("al", 2); break; }
        break;
      case 'i':
        if (ends("iciti", 5)) { r("ic", 2); break; }
        break;
      case 'l':
        if (ends("ical", 4)) { r("ic", 2); break; }
        if (ends("ful", 3)) { r("", 0); break; }
        break;
      case 's':
        if (ends("ness", 4)) { r("", 0); break; }
        break;
    }
  }

  void step4() {
    switch (b[static_cast<size_t>(k - 1)]) {
      case 'a':
        if (ends("al", 2)) break;
        return;
      case 'c':
        if (ends("ance", 4)) break;
        if (ends("ence", 4)) break;
        return;
      case 'e':
        if (ends("er", 2)) break;
        return;
      case 'i':
        if (ends("ic", 2)) break;
        return;
      case 'l':
        if (ends("able", 4)) break;
        if (ends("ible", 4)) break;
        return;
      case 'n':
        if (ends("ant", 3)) break;
        if (ends("ement", 5)) break;
        if (ends("ment", 4)) break;
        if (ends("ent", 3)) break;
        return;
      case 'o':
        if (ends("ion", 3) && j >= 0 &&
            (b[static_cast<size_t>(j)] == 's' || b[static_cast<size_t>(j)] == 't'))
          break;
        if (ends("ou", 2)) break;
        return;
      case 's':
        if (ends("ism", 3)) break;
        return;
      case 't':
        if (ends("ate", 3)) break;
        if (ends("iti", 3)) break;
        return;
      case 'u':
        if (ends("ous", 3)) break;
        return;
      case 'v':
        if (ends("ive", 3)) break;
        return;
      case 'z':
        if (ends("ize", 3)) break;
        return;
      default:
        return;
    }
    if (m() > 1) k = j;
  }

  void step5() {
    j = k;
    if (b[static_cast<size_t>(k)] == 'e') {
      int a = m();
      if (a > 1 || (a == 1 && !cvc(k - 1))) --k;
    }
    if (b[static_cast<size_t>(k)] == 'l' && doublec(k) && m() > 1) --k;
  }

  std::string stem(const std::string& word) {
    b = word;
    k = static_cast<int>(b.size()) - 1;
    j = 0;
    if (k <= 1) return b;
    step1ab();
    step1c();
    step2();
    step3();
    step4();
    step5();
    return b.substr(0, static_cast<size_t>(k + 1));
  }
};

std::string ascii_lower(const std::string& s) {
  std::string out = s;
  for (char& c : out)
    c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

}  // namespace

std::string porter_stem(const std::string& word) {
  if (word.empty()) return word;
  return Stemmer{}.stem(word);
}

std::vector<std::string> porter_stem_tokens(const std::vector<std::string>& tokens) {
  std::vector<std::string> out;
  out.reserve(tokens.size());
  for (const auto& t : tokens) out.push_back(porter_stem(ascii_lower(t)));
  return out;
}

}  // namespace textkg
