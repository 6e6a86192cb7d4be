#include "wordorder/typology.hpp"

#include <string_view>

namespace wordorder {

ParseError::ParseError(long line, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}

std::vector<LanguageRecord> parse_language_table(std::istream& input) {
  std::vector<LanguageRecord> records;
  std::string line;
  long line_number = 0;
  bool seen_header = false;
  while (std::getline(input, line)) {
    ++line_number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line_number == 1 && line.starts_with("\xEF\xBB\xBF")) line.erase(0, 3);

    if (!seen_header) {
      if (line.empty() && input.peek() == std::char_traits<char>::eof()) break;
      if (line != kLanguageTableHeader) {
        throw ParseError(line_number, std::string("expected header '") + kLanguageTableHeader +
                                          "', got '" + line + "'");
      }
      seen_header = true;
      continue;
    }
    if (line.empty()) {
      if (input.peek() == std::char_traits<char>::eof()) break;
      throw ParseError(line_number, "empty row");
    }

    const std::size_t comma = line.find(',');
    if (comma == std::string::npos || line.find(',', comma + 1) != std::string::npos) {
      throw ParseError(line_number, "expected exactly two fields in '" + line + "'");
    }
    LanguageRecord record;
    record.language_id = line.substr(0, comma);
    const std::string_view token = std::string_view(line).substr(comma + 1);
    if (record.language_id.empty()) throw ParseError(line_number, "empty language_id");
    if (token != "NONE") {
      record.dominant_order = parse_word_order(token);
      if (!record.dominant_order) {
        throw ParseError(line_number, "unknown dominant order '" + std::string(token) + "'");
      }
    }
    records.push_back(std::move(record));
  }
  return records;
}

void write_language_table(std::ostream& output, const std::vector<LanguageRecord>& records) {
  output << kLanguageTableHeader << '\n';
  for (const LanguageRecord& record : records) {
    output << record.language_id << ','
           << (record.dominant_order ? to_string(*record.dominant_order) : "NONE") << '\n';
  }
}

VerbPosition classify_verb_position(std::optional<WordOrder> order) {
  return order ? verb_position(*order) : VerbPosition::none;
}

TypologySummary summarize(const std::vector<LanguageRecord>& records) {
  TypologySummary summary;
  for (const LanguageRecord& record : records) {
    switch (classify_verb_position(record.dominant_order)) {
      case VerbPosition::initial: ++summary.n1; break;
      case VerbPosition::medial: ++summary.n2; break;
      case VerbPosition::final: ++summary.n3; break;
      case VerbPosition::none: ++summary.none_count; break;
    }
    ++summary.total;
  }
  return summary;
}

}  // namespace wordorder
