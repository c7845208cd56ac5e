#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace bohr {

enum class Format { Text, Csv, Markdown, Json };

std::optional<Format> parse_format(std::string_view s);
std::string to_string(Format f);

// %.12g, with "inf", "-inf" and "nan" spelled out.
std::string format_number(double v);

// A blank cell is std::monostate; numbers keep their type for JSON output.
using Cell = std::variant<std::monostate, std::string, double, long long, bool>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
  // Free-form lines after the rows: '#' comments in CSV, a list in Markdown,
  // a "notes" array in JSON.
  std::vector<std::string> notes;
};

// Text is rendered as CSV.
void render(const Table& table, Format format, std::ostream& out);

}  // namespace bohr
