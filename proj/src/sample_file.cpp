#include "robust1d/sample_file.hpp"

#include <charconv>
#include <istream>
#include <sstream>
#include <string>

#include "robust1d/error.hpp"

namespace robust1d {

namespace {

bool is_blank(char ch) { return ch == ' ' || ch == '\t' || ch == '\r' || ch == '\v' || ch == '\f'; }

double parse_number(std::string_view tok, std::size_t line) {
  std::string_view digits = tok;
  if (!digits.empty() && digits.front() == '+') digits.remove_prefix(1);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), v);
  if (digits.empty() || ec != std::errc() || ptr != digits.data() + digits.size()) {
    throw Error(ErrorKind::Parse, "line " + std::to_string(line) + ": not a number: '" + std::string(tok) + "'");
  }
  return v;
}

}  // namespace

SampleRows parse_sample_rows(std::istream& in) {
  SampleRows rows;
  std::vector<double> weights;
  std::size_t arity = 0;
  std::string line;
  std::size_t line_no = 0;

  while (std::getline(in, line)) {
    ++line_no;
    std::vector<std::string_view> tokens;
    std::string_view rest(line);
    while (!rest.empty()) {
      std::size_t i = 0;
      while (i < rest.size() && is_blank(rest[i])) ++i;
      rest.remove_prefix(i);
      if (rest.empty()) break;
      if (tokens.empty() && rest.front() == '#') break;
      std::size_t j = 0;
      while (j < rest.size() && !is_blank(rest[j])) ++j;
      tokens.push_back(rest.substr(0, j));
      rest.remove_prefix(j);
    }
    if (tokens.empty()) continue;
    if (tokens.size() > 2) {
      throw Error(ErrorKind::Parse, "line " + std::to_string(line_no) + ": expected 1 or 2 columns, got " +
                                        std::to_string(tokens.size()));
    }
    if (arity == 0) arity = tokens.size();
    if (tokens.size() != arity) {
      throw Error(ErrorKind::Parse, "line " + std::to_string(line_no) + ": mixed row arities (" +
                                        std::to_string(arity) + " then " + std::to_string(tokens.size()) + ")");
    }
    rows.values.push_back(parse_number(tokens[0], line_no));
    if (arity == 2) weights.push_back(parse_number(tokens[1], line_no));
  }
  if (in.bad()) throw Error(ErrorKind::Parse, "read error");
  if (arity == 2) rows.weights = std::move(weights);
  return rows;
}

SampleRows parse_sample_rows(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_sample_rows(in);
}

}  // namespace robust1d
