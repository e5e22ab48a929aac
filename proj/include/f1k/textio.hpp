#pragma once

#include <istream>
#include <sstream>
#include <string>
#include <vector>

namespace f1k::detail {

// Lines with '#' comments stripped and blank lines dropped.
inline std::vector<std::string> significant_lines(std::istream& in) {
  std::vector<std::string> out;
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream probe(line);
    std::string word;
    if (probe >> word) out.push_back(line);
  }
  return out;
}

}  // namespace f1k::detail
