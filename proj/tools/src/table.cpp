#include "stacklab_cli/table.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

#include "stacklab/errors.hpp"

namespace stacklab::cli {

namespace {

// Text cells round doubles to 10 digits; CSV keeps the shortest round-trip form.
std::string cell(const nlohmann::json& v, bool text) {
  if (v.is_null()) return text ? "-" : "";
  if (v.is_string()) return v.get<std::string>();
  if (text && v.is_number_float()) return format_double(v.get<double>(), 10);
  return v.dump();
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char ch : s) {
    if (ch == '"') quoted += '"';
    quoted += ch;
  }
  return quoted + '"';
}

}  // namespace

std::string format_double(double x, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, x);
  return buf;
}

void Table::add(std::vector<nlohmann::json> row) {
  if (row.size() != columns.size()) throw UsageError("Table::add: row width does not match the header");
  rows.push_back(std::move(row));
}

nlohmann::json Table::to_json() const {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& row : rows) {
    nlohmann::json obj = nlohmann::json::object();
    for (std::size_t i = 0; i < columns.size(); ++i) obj[columns[i]] = row[i];
    out.push_back(std::move(obj));
  }
  return out;
}

std::string Table::render(Format f) const {
  std::ostringstream os;
  switch (f) {
    case Format::Json: os << to_json().dump(2) << '\n'; break;
    case Format::Csv:
      for (std::size_t i = 0; i < columns.size(); ++i) os << (i ? "," : "") << csv_escape(columns[i]);
      os << '\n';
      for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << csv_escape(cell(row[i], false));
        os << '\n';
      }
      break;
    case Format::Text: {
      std::vector<std::vector<std::string>> cells;
      std::vector<std::size_t> width(columns.size());
      for (std::size_t i = 0; i < columns.size(); ++i) width[i] = columns[i].size();
      for (const auto& row : rows) {
        auto& r = cells.emplace_back();
        for (std::size_t i = 0; i < row.size(); ++i) {
          r.push_back(cell(row[i], true));
          width[i] = std::max(width[i], r.back().size());
        }
      }
      const auto line = [&](const std::vector<std::string>& r) {
        for (std::size_t i = 0; i < r.size(); ++i) {
          if (i) os << "  ";
          os << std::string(width[i] - r[i].size(), ' ') << r[i];
        }
        os << '\n';
      };
      line(columns);
      for (const auto& r : cells) line(r);
      break;
    }
  }
  return os.str();
}

}  // namespace stacklab::cli
