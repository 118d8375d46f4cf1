#pragma once

#include <string>
#include <utility>
#include <vector>

#include "exactmath.hpp"

namespace ucp {

// Tabular result of one command. Rendering is deterministic: identical
// inputs and options produce byte-identical output in every format.
struct Cell {
  std::string text;
  bool numeric = false;
};

Cell num_cell(const BigInt& v);
Cell num_cell(long long v);
Cell text_cell(std::string s);
Cell bool_cell(bool b);

struct Report {
  std::vector<std::pair<std::string, std::string>> meta;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;

  // Optional secondary table (per-filter trace of classify).
  std::vector<std::string> trace_columns;
  std::vector<std::vector<Cell>> trace_rows;

  // format is "table", "json" or "csv"; throws std::invalid_argument on
  // anything else.
  std::string render(const std::string& format) const;
};

}  // namespace ucp
