#pragma once

#include "qtails/checked_int.hpp"

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <vector>

namespace qtails {

// OEIS-style b-file: one "n value" pair per line, '#' comment lines and blank
// lines ignored, n strictly increasing.
struct BFileEntry {
  long long n = 0;
  Int value;
};

class bfile_parse_error : public std::runtime_error {
 public:
  bfile_parse_error(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

std::vector<BFileEntry> parse_bfile(std::istream& in);

struct BFileDiff {
  bool match = true;
  long long compared = 0;
  long long first_bad_n = -1;
  Int file_value;
  Int computed_value;
};

// Compares file entries against values[first_index..], where values is the
// internal table indexed from 0. File entries below first_index are compared
// against the stored convention value at that index.
BFileDiff compare_bfile(const std::vector<BFileEntry>& entries, const std::vector<Int>& values);

}  // namespace qtails
