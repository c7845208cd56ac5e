#include "bohr/report.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>

#include <json.hpp>

namespace bohr {

namespace {

std::string cell_text(const Cell& c) {
  struct Visitor {
    std::string operator()(std::monostate) const { return ""; }
    std::string operator()(const std::string& s) const { return s; }
    std::string operator()(double v) const { return format_number(v); }
    std::string operator()(long long v) const { return std::to_string(v); }
    std::string operator()(bool v) const { return v ? "true" : "false"; }
  };
  return std::visit(Visitor{}, c);
}

std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + '"';
}

nlohmann::ordered_json cell_json(const Cell& c) {
  struct Visitor {
    nlohmann::ordered_json operator()(std::monostate) const { return nullptr; }
    nlohmann::ordered_json operator()(const std::string& s) const { return s; }
    nlohmann::ordered_json operator()(double v) const {
      // JSON has no inf/nan.
      if (!std::isfinite(v)) return format_number(v);
      return v;
    }
    nlohmann::ordered_json operator()(long long v) const { return v; }
    nlohmann::ordered_json operator()(bool v) const { return v; }
  };
  return std::visit(Visitor{}, c);
}

void render_csv(const Table& t, std::ostream& out) {
  for (std::size_t i = 0; i < t.columns.size(); ++i)
    out << (i ? "," : "") << csv_quote(t.columns[i]);
  out << '\n';
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i)
      out << (i ? "," : "") << csv_quote(cell_text(row[i]));
    out << '\n';
  }
  for (const auto& n : t.notes) out << "# " << n << '\n';
}

void render_markdown(const Table& t, std::ostream& out) {
  out << '|';
  for (const auto& c : t.columns) out << ' ' << c << " |";
  out << "\n|";
  for (std::size_t i = 0; i < t.columns.size(); ++i) out << "---|";
  out << '\n';
  for (const auto& row : t.rows) {
    out << '|';
    for (const auto& c : row) out << ' ' << cell_text(c) << " |";
    out << '\n';
  }
  if (!t.notes.empty()) {
    out << '\n';
    for (const auto& n : t.notes) out << "- " << n << '\n';
  }
}

void render_json(const Table& t, std::ostream& out) {
  nlohmann::ordered_json doc;
  doc["rows"] = nlohmann::ordered_json::array();
  for (const auto& row : t.rows) {
    nlohmann::ordered_json obj;
    for (std::size_t i = 0; i < row.size() && i < t.columns.size(); ++i)
      obj[t.columns[i]] = cell_json(row[i]);
    doc["rows"].push_back(std::move(obj));
  }
  doc["notes"] = t.notes;
  out << doc.dump(2) << '\n';
}

}  // namespace

std::optional<Format> parse_format(std::string_view s) {
  if (s == "text") return Format::Text;
  if (s == "csv") return Format::Csv;
  if (s == "md" || s == "markdown") return Format::Markdown;
  if (s == "json") return Format::Json;
  return std::nullopt;
}

std::string to_string(Format f) {
  switch (f) {
    case Format::Text: return "text";
    case Format::Csv: return "csv";
    case Format::Markdown: return "md";
    case Format::Json: return "json";
  }
  return "?";
}

std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

void render(const Table& table, Format format, std::ostream& out) {
  switch (format) {
    case Format::Text:
    case Format::Csv: render_csv(table, out); break;
    case Format::Markdown: render_markdown(table, out); break;
    case Format::Json: render_json(table, out); break;
  }
}

}  // namespace bohr
