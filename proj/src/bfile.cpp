#include "qtails/bfile.hpp"

#include <istream>
#include <sstream>
#include <string>

namespace qtails {

std::vector<BFileEntry> parse_bfile(std::istream& in) {
  std::vector<BFileEntry> entries;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    size_t start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos) continue;       // blank
    if (line[start] == '#') continue;               // comment
    std::istringstream tokens(line);
    std::string n_token, value_token, extra;
    if (!(tokens >> n_token >> value_token)) throw bfile_parse_error(line_no, "malformed line");
    if (tokens >> extra) throw bfile_parse_error(line_no, "trailing tokens");
    BFileEntry entry;
    try {
      size_t used = 0;
      entry.n = std::stoll(n_token, &used);
      if (used != n_token.size()) throw std::invalid_argument("");
    } catch (const std::exception&) {
      throw bfile_parse_error(line_no, "malformed index");
    }
    if (entry.n < 0) throw bfile_parse_error(line_no, "negative index");
    try {
      entry.value = Int::from_string(value_token);
    } catch (const std::invalid_argument&) {
      throw bfile_parse_error(line_no, "malformed value");
    }
    if (!entries.empty() && entry.n <= entries.back().n)
      throw bfile_parse_error(line_no, "index not strictly increasing");
    entries.push_back(entry);
  }
  return entries;
}

BFileDiff compare_bfile(const std::vector<BFileEntry>& entries, const std::vector<Int>& values) {
  BFileDiff diff;
  for (const auto& entry : entries) {
    if (entry.n >= static_cast<long long>(values.size())) break;  // beyond computed range
    const Int& computed = values[static_cast<size_t>(entry.n)];
    ++diff.compared;
    if (!(computed == entry.value)) {
      diff.match = false;
      diff.first_bad_n = entry.n;
      diff.file_value = entry.value;
      diff.computed_value = computed;
      break;
    }
  }
  return diff;
}

}  // namespace qtails
