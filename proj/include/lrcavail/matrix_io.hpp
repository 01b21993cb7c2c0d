#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "lrcavail/bit_matrix.hpp"

namespace lrcavail {

enum class ParseErrorKind { bad_header, ragged_row, bad_char, row_count_mismatch };

std::string to_string(ParseErrorKind kind);

class MatrixParseError : public std::runtime_error {
 public:
  MatrixParseError(ParseErrorKind kind, std::size_t line, const std::string& detail);

  ParseErrorKind kind() const noexcept { return kind_; }
  /// 1-based; the header is line 1.
  std::size_t line() const noexcept { return line_; }

 private:
  ParseErrorKind kind_;
  std::size_t line_;
};

/// Header "m n" followed by m lines of n characters in {0,1}. Trailing
/// carriage returns and a final newline are tolerated; blank lines after
/// the last row are ignored.
BitMatrix parse_matrix(std::string_view text);

/// Canonical form: header, then one line per row, each newline-terminated.
std::string serialize_matrix(const BitMatrix& m);

BitMatrix read_matrix_file(const std::string& path);
void write_matrix_file(const std::string& path, const BitMatrix& m);

}  // namespace lrcavail
