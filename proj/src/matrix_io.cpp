#include "lrcavail/matrix_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

namespace lrcavail {

std::string to_string(ParseErrorKind kind) {
  switch (kind) {
    case ParseErrorKind::bad_header:
      return "bad_header";
    case ParseErrorKind::ragged_row:
      return "ragged_row";
    case ParseErrorKind::bad_char:
      return "bad_char";
    case ParseErrorKind::row_count_mismatch:
      return "row_count_mismatch";
  }
  return "unknown";
}

MatrixParseError::MatrixParseError(ParseErrorKind kind, std::size_t line,
                                   const std::string& detail)
    : std::runtime_error("line " + std::to_string(line) + ": " + to_string(kind) + ": " + detail),
      kind_(kind),
      line_(line) {}

namespace {

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = text.find('\n', pos);
    std::string_view line = text.substr(pos, end == std::string_view::npos ? end : end - pos);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    if (end == std::string_view::npos) break;
    pos = end + 1;
  }
  while (!lines.empty() && lines.back().empty()) lines.pop_back();
  return lines;
}

bool read_count(std::string_view& s, std::size_t& out) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  if (ec != std::errc() || ptr == s.data()) return false;
  s.remove_prefix(static_cast<std::size_t>(ptr - s.data()));
  return true;
}

}  // namespace

BitMatrix parse_matrix(std::string_view text) {
  const auto lines = split_lines(text);
  if (lines.empty()) throw MatrixParseError(ParseErrorKind::bad_header, 1, "empty input");

  std::string_view header = lines[0];
  std::size_t m = 0;
  std::size_t n = 0;
  if (!read_count(header, m) || !read_count(header, n)) {
    throw MatrixParseError(ParseErrorKind::bad_header, 1, "expected \"m n\"");
  }
  while (!header.empty() && (header.front() == ' ' || header.front() == '\t')) {
    header.remove_prefix(1);
  }
  if (!header.empty()) throw MatrixParseError(ParseErrorKind::bad_header, 1, "trailing text");
  if (n == 0) throw MatrixParseError(ParseErrorKind::bad_header, 1, "column count must be >= 1");

  BitMatrix out(m, n);
  const std::size_t body = lines.size() - 1;
  for (std::size_t i = 0; i < std::min(body, m); ++i) {
    const std::string_view row = lines[i + 1];
    const std::size_t line_no = i + 2;
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (row[j] != '0' && row[j] != '1') {
        throw MatrixParseError(ParseErrorKind::bad_char, line_no,
                               "column " + std::to_string(j + 1) + " is not 0 or 1");
      }
    }
    if (row.size() != n) {
      throw MatrixParseError(ParseErrorKind::ragged_row, line_no,
                             "expected " + std::to_string(n) + " entries, found " +
                                 std::to_string(row.size()));
    }
    for (std::size_t j = 0; j < n; ++j) {
      if (row[j] == '1') out.set(i, j, true);
    }
  }
  if (body != m) {
    throw MatrixParseError(ParseErrorKind::row_count_mismatch, std::min(body, m) + 2,
                           "header declares " + std::to_string(m) + " rows, found " +
                               std::to_string(body));
  }
  return out;
}

std::string serialize_matrix(const BitMatrix& m) {
  std::string out = std::to_string(m.rows()) + " " + std::to_string(m.cols()) + "\n";
  out.reserve(out.size() + m.rows() * (m.cols() + 1));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out.push_back(m.get(i, j) ? '1' : '0');
    out.push_back('\n');
  }
  return out;
}

BitMatrix read_matrix_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_matrix(buf.str());
}

void write_matrix_file(const std::string& path, const BitMatrix& m) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << serialize_matrix(m);
}

}  // namespace lrcavail
