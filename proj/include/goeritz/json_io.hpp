#pragma once

// Matrix and factor-list JSON: arrays of decimal strings, so arbitrarily
// large integers survive any JSON reader. Requires nlohmann/json (vendor/json.hpp).

#include "json.hpp"

#include <span>
#include <string>
#include <vector>

#include "goeritz/errors.hpp"
#include "goeritz/intlattice.hpp"

namespace goeritz {

inline nlohmann::json integers_to_json(std::span<const Integer> values) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& v : values) out.push_back(v.get_str());
  return out;
}

inline nlohmann::json matrix_to_json(const IntMatrix& m) {
  nlohmann::json out = nlohmann::json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).get_str());
    out.push_back(std::move(row));
  }
  return out;
}

inline Integer integer_from_json(const nlohmann::json& v) {
  if (v.is_string()) {
    Integer out;
    const auto& s = v.get_ref<const std::string&>();
    if (s.empty() || out.set_str(s, 10) != 0) throw ParseError("not a decimal integer: \"" + s + "\"");
    return out;
  }
  if (v.is_number_integer()) return Integer(v.dump());
  throw ParseError("matrix entry is neither an integer nor a decimal string: " + v.dump());
}

/// Accepts an array of equal-length arrays of decimal strings (or plain integers).
inline IntMatrix matrix_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw ParseError("matrix JSON must be an array of rows");
  const std::size_t rows = j.size();
  const std::size_t cols = rows == 0 ? 0 : j.front().size();
  std::vector<Integer> entries;
  entries.reserve(rows * cols);
  for (const auto& row : j) {
    if (!row.is_array() || row.size() != cols) throw ParseError("matrix JSON rows must be arrays of equal length");
    for (const auto& v : row) entries.push_back(integer_from_json(v));
  }
  return IntMatrix(rows, cols, std::move(entries));
}

}  // namespace goeritz
