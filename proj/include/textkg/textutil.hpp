// Small string helpers shared across the pipeline stages.
#pragma once

#include <string>
#include <vector>

namespace textkg {

std::string lowercase(const std::string& s);  // ASCII only

std::vector<std::string> split_ws(const std::string& s);

std::string join(const std::vector<std::string>& parts, const std::string& sep);

bool is_numeral(const std::string& token);  // digits with optional . or , groups

/// True when `needle` occurs in `haystack` as a contiguous subsequence.
bool contains_seq(const std::vector<std::string>& haystack,
                  const std::vector<std::string>& needle);

std::string strip(const std::string& s);

}  // namespace textkg
