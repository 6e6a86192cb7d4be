#pragma once

#include <istream>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "wordorder/orders.hpp"

namespace wordorder {

/// One row of a `language_id,dominant_order` table. An empty dominant_order
/// means the language lacks one (token NONE).
struct LanguageRecord {
  std::string language_id;
  std::optional<WordOrder> dominant_order;

  bool operator==(const LanguageRecord&) const = default;
};

struct TypologySummary {
  long n1 = 0;  // verb-initial
  long n2 = 0;  // verb-medial
  long n3 = 0;  // verb-final
  long none_count = 0;
  long total = 0;

  bool operator==(const TypologySummary&) const = default;
};

class ParseError : public std::runtime_error {
public:
  ParseError(long line, const std::string& message);
  long line() const { return line_; }

private:
  long line_;
};

inline constexpr const char* kLanguageTableHeader = "language_id,dominant_order";

/// Reads the table. LF or CRLF line endings; a UTF-8 BOM is skipped; an empty
/// stream yields no records. Throws ParseError with the 1-based line number.
std::vector<LanguageRecord> parse_language_table(std::istream& input);

/// Canonical form: header plus one LF-terminated row per record, in input order.
void write_language_table(std::ostream& output, const std::vector<LanguageRecord>& records);

VerbPosition classify_verb_position(std::optional<WordOrder> order);

TypologySummary summarize(const std::vector<LanguageRecord>& records);

}  // namespace wordorder
