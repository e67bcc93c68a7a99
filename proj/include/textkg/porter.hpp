#pragma once

#include <string>
#include <vector>

namespace textkg {

/// Classic Porter suffix-stripping stemmer (steps 1a-5b), byte-deterministic.
/// Expects a lowercase word; words of length <= 2 are returned unchanged.
std::string porter_stem(const std::string& word);

/// Stems every token in place order, lowercasing first.
std::vector<std::string> porter_stem_tokens(const std::vector<std::string>& tokens);

}  // namespace textkg
