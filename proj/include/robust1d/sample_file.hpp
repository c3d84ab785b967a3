#pragma once

#include <iosfwd>
#include <optional>
#include <string_view>
#include <vector>

namespace robust1d {

/// Raw contents of a sample file: one value per row, or value and weight.
struct SampleRows {
  std::vector<double> values;
  /// Present when every row has two columns.
  std::optional<std::vector<double>> weights;
};

/// Parses whitespace-separated decimal rows; blank lines and lines whose
/// first non-blank character is '#' are skipped. Throws Error(Parse) on
/// malformed numbers, more than two columns, or mixed row arities. Values are
/// not validated here (NaN, empty input and bad weights are left to SampleSet).
SampleRows parse_sample_rows(std::istream& in);
SampleRows parse_sample_rows(std::string_view text);

}  // namespace robust1d
