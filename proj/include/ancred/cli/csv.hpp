#pragma once

// Batch CSV input: comma-separated, UTF-8, decimal point, mandatory header.
// Expected columns are id, lower, upper plus optional level and scale;
// unknown columns are ignored.  Fields may be double-quoted (embedded commas
// and doubled quotes supported; fields do not span lines).

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ancred/cli/study.hpp"

namespace ancred::cli {

class BadHeaderError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct BatchReject {
    std::size_t line = 0;  // 1-based line number in the input
    std::string reason;
};

struct ParsedBatch {
    std::vector<StudyRecord> records;  // well-formed rows, input order
    std::vector<BatchReject> rejects;
};

// Splits one CSV line into fields.
std::vector<std::string> split_csv_line(const std::string& line);

// Quotes a value for CSV output when it needs quoting.
std::string csv_escape(const std::string& value);

// Parses a whole batch file.  Rows whose level/scale cells are empty fall
// back to `default_level` / identity.  Malformed rows land in `rejects`
// with a reason; parsing continues.  Throws BadHeaderError when the header
// is missing a required column or duplicates one.
ParsedBatch parse_study_csv(std::istream& in, double default_level = 0.95);

}  // namespace ancred::cli
