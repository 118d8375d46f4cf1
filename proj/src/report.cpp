#include "report.hpp"

#include <algorithm>
#include <limits>

#include <json.hpp>

namespace ucp {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json cell_json(const Cell& c) {
  if (c.numeric) {
    const BigInt v(c.text);
    static const BigInt kMin = std::numeric_limits<long long>::min();
    static const BigInt kMax = std::numeric_limits<long long>::max();
    // Values beyond 64 bits are emitted as decimal strings.
    if (v >= kMin && v <= kMax) return ordered_json(v.convert_to<long long>());
  }
  return ordered_json(c.text);
}

ordered_json table_json(const std::vector<std::string>& columns,
                        const std::vector<std::vector<Cell>>& rows) {
  ordered_json arr = ordered_json::array();
  for (const auto& row : rows) {
    ordered_json obj = ordered_json::object();
    for (size_t i = 0; i < columns.size(); ++i) obj[columns[i]] = cell_json(row[i]);
    arr.push_back(std::move(obj));
  }
  return arr;
}

std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  out += '"';
  return out;
}

void append_csv(std::string& out, const std::vector<std::string>& columns,
                const std::vector<std::vector<Cell>>& rows) {
  for (size_t i = 0; i < columns.size(); ++i) {
    if (i) out += ',';
    out += csv_quote(columns[i]);
  }
  out += "\r\n";
  for (const auto& row : rows) {
    for (size_t i = 0; i < row.size(); ++i) {
      if (i) out += ',';
      out += csv_quote(row[i].text);
    }
    out += "\r\n";
  }
}

void append_table(std::string& out, const std::vector<std::string>& columns,
                  const std::vector<std::vector<Cell>>& rows) {
  std::vector<size_t> width(columns.size());
  for (size_t i = 0; i < columns.size(); ++i) width[i] = columns[i].size();
  for (const auto& row : rows)
    for (size_t i = 0; i < row.size(); ++i)
      width[i] = std::max(width[i], row[i].text.size());
  const auto emit = [&](const std::vector<std::string>& cells) {
    for (size_t i = 0; i < cells.size(); ++i) {
      if (i) out += "  ";
      out += cells[i];
      if (i + 1 < cells.size()) out.append(width[i] - cells[i].size(), ' ');
    }
    out += '\n';
  };
  emit(columns);
  std::vector<std::string> dashes;
  for (size_t w : width) dashes.push_back(std::string(w, '-'));
  emit(dashes);
  for (const auto& row : rows) {
    std::vector<std::string> cells;
    for (const Cell& c : row) cells.push_back(c.text);
    emit(cells);
  }
}

}  // namespace

Cell num_cell(const BigInt& v) { return {v.str(), true}; }
Cell num_cell(long long v) { return {std::to_string(v), true}; }
Cell text_cell(std::string s) { return {std::move(s), false}; }
Cell bool_cell(bool b) { return {b ? "true" : "false", false}; }

std::string Report::render(const std::string& format) const {
  if (format == "json") {
    ordered_json j;
    ordered_json m = ordered_json::object();
    for (const auto& [k, v] : meta) m[k] = v;
    j["meta"] = std::move(m);
    j["rows"] = table_json(columns, rows);
    if (!trace_columns.empty()) j["trace"] = table_json(trace_columns, trace_rows);
    return j.dump(2) + "\n";
  }
  if (format == "csv") {
    std::string out;
    append_csv(out, columns, rows);
    if (!trace_columns.empty()) {
      out += "\r\n";
      append_csv(out, trace_columns, trace_rows);
    }
    return out;
  }
  if (format == "table") {
    std::string out;
    for (const auto& [k, v] : meta) out += "# " + k + ": " + v + "\n";
    if (!meta.empty()) out += '\n';
    append_table(out, columns, rows);
    if (!trace_columns.empty()) {
      out += '\n';
      append_table(out, trace_columns, trace_rows);
    }
    return out;
  }
  throw std::invalid_argument("render: unknown format '" + format + "'");
}

}  // namespace ucp
