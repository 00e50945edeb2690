#pragma once

#include <istream>
#include <ostream>
#include <span>
#include <string>
#include <vector>

namespace vaxsent::csv {

// RFC 4180 reader: comma delimiter, double-quote quoting with "" escapes,
// quoted fields may contain commas and newlines, CRLF and LF both accepted.
class Reader {
 public:
  explicit Reader(std::istream& in) : in_(in) {}

  // Reads the next record into `row`. Returns false at end of input.
  // A quoted field left open at EOF sets had_error().
  bool next(std::vector<std::string>& row);

  bool had_error() const { return error_; }
  std::size_t line() const { return line_; }

 private:
  std::istream& in_;
  std::size_t line_ = 0;
  bool error_ = false;
};

// Quotes only when the field needs it, so round-trips stay byte-stable.
std::string escape_field(const std::string& field);

void write_row(std::ostream& out, std::span<const std::string> row);

}  // namespace vaxsent::csv
