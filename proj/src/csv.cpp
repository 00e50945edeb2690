#include "vaxsent/csv.hpp"

namespace vaxsent::csv {

bool Reader::next(std::vector<std::string>& row) {
  row.clear();
  int c = in_.get();
  if (c == EOF) return false;
  ++line_;

  std::string field;
  bool quoted = false;
  bool any = false;

  auto end_field = [&] {
    row.push_back(std::move(field));
    field.clear();
  };

  while (true) {
    if (c == EOF) {
      if (quoted) error_ = true;  // unterminated quote
      end_field();
      return true;
    }
    if (quoted) {
      if (c == '"') {
        int peek = in_.get();
        if (peek == '"') {
          field.push_back('"');
        } else {
          quoted = false;
          c = peek;
          continue;
        }
      } else {
        if (c == '\n') ++line_;
        field.push_back(static_cast<char>(c));
      }
    } else {
      if (c == ',') {
        end_field();
        any = true;
      } else if (c == '\n') {
        end_field();
        return true;
      } else if (c == '\r') {
        int peek = in_.get();
        if (peek == '\n') {
          end_field();
          return true;
        }
        field.push_back('\r');
        c = peek;
        continue;
      } else if (c == '"' && field.empty()) {
        quoted = true;
      } else {
        field.push_back(static_cast<char>(c));
      }
    }
    c = in_.get();
    (void)any;
  }
}

std::string escape_field(const std::string& field) {
  bool needs_quote = false;
  for (char c : field) {
    if (c == ',' || c == '"' || c == '\n' || c == '\r') {
      needs_quote = true;
      break;
    }
  }
  if (!needs_quote) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += "\"\"";
    else out.push_back(c);
  }
  out += '"';
  return out;
}

void write_row(std::ostream& out, std::span<const std::string> row) {
  for (std::size_t i = 0; i < row.size(); ++i) {
    if (i) out.put(',');
    out << escape_field(row[i]);
  }
  out.put('\n');
}

}  // namespace vaxsent::csv
