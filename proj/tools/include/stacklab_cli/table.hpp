#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace stacklab::cli {

enum class Format { Text, Csv, Json };

// Rows of JSON scalars under named columns. Strings are emitted verbatim (big integers
// travel as decimal strings); doubles round-trip exactly in CSV and JSON and are rounded
// to 10 digits in text; null is "-" in text and an empty CSV field.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<nlohmann::json>> rows;

  void add(std::vector<nlohmann::json> row);
  nlohmann::json to_json() const;  // array of row objects
  std::string render(Format f) const;
};

std::string format_double(double x, int digits);

}  // namespace stacklab::cli
