#include "ancred/cli/csv.hpp"

#include <algorithm>
#include <charconv>
#include <istream>

namespace ancred::cli {

namespace {

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r");
    if (begin == std::string::npos) return "";
    const auto end = s.find_last_not_of(" \t\r");
    return s.substr(begin, end - begin + 1);
}

std::optional<double> parse_double(const std::string& raw) {
    const std::string s = trim(raw);
    if (s.empty()) return std::nullopt;
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
    return value;
}

struct HeaderIndex {
    std::size_t id = 0, lower = 0, upper = 0;
    std::optional<std::size_t> level, scale;
    std::size_t width = 0;
};

HeaderIndex index_header(const std::vector<std::string>& names) {
    HeaderIndex idx;
    idx.width = names.size();
    std::optional<std::size_t> id, lower, upper;
    for (std::size_t i = 0; i < names.size(); ++i) {
        const std::string name = trim(names[i]);
        auto assign = [&](std::optional<std::size_t>& slot) {
            if (slot) throw BadHeaderError("duplicate column '" + name + "' in header");
            slot = i;
        };
        if (name == "id") assign(id);
        else if (name == "lower") assign(lower);
        else if (name == "upper") assign(upper);
        else if (name == "level") assign(idx.level);
        else if (name == "scale") assign(idx.scale);
        // anything else is ignored
    }
    if (!id || !lower || !upper)
        throw BadHeaderError("header must name the columns id, lower and upper");
    idx.id = *id;
    idx.lower = *lower;
    idx.upper = *upper;
    return idx;
}

}  // namespace

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> fields;
    std::string field;
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        const char c = line[i];
        if (quoted) {
            if (c == '"') {
                if (i + 1 < line.size() && line[i + 1] == '"') {
                    field += '"';
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                field += c;
            }
        } else if (c == '"' && field.empty()) {
            quoted = true;
        } else if (c == ',') {
            fields.push_back(std::move(field));
            field.clear();
        } else {
            field += c;
        }
    }
    fields.push_back(std::move(field));
    return fields;
}

std::string csv_escape(const std::string& value) {
    if (value.find_first_of(",\"\n") == std::string::npos) return value;
    std::string out = "\"";
    for (const char c : value) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

ParsedBatch parse_study_csv(std::istream& in, double default_level) {
    std::string line;
    std::size_t line_no = 0;

    // header
    if (!std::getline(in, line))
        throw BadHeaderError("input is empty, expected a header row");
    ++line_no;
    if (line.size() >= 3 && line.compare(0, 3, "\xEF\xBB\xBF") == 0)
        line.erase(0, 3);  // UTF-8 BOM
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const HeaderIndex header = index_header(split_csv_line(line));

    ParsedBatch batch;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (trim(line).empty()) continue;

        const std::vector<std::string> fields = split_csv_line(line);
        auto reject = [&](std::string reason) {
            batch.rejects.push_back({line_no, std::move(reason)});
        };
        if (fields.size() != header.width) {
            reject("expected " + std::to_string(header.width) + " fields, found " +
                   std::to_string(fields.size()));
            continue;
        }

        StudyRecord record;
        record.id = trim(fields[header.id]);
        record.level = default_level;

        const auto lower = parse_double(fields[header.lower]);
        const auto upper = parse_double(fields[header.upper]);
        if (!lower || !upper) {
            reject("lower/upper must be numeric");
            continue;
        }
        record.lower = *lower;
        record.upper = *upper;

        if (header.level) {
            const std::string cell = trim(fields[*header.level]);
            if (!cell.empty()) {
                const auto level = parse_double(cell);
                if (!level) {
                    reject("level must be numeric");
                    continue;
                }
                record.level = *level;
            }
        }
        if (header.scale) {
            const std::string cell = trim(fields[*header.scale]);
            if (!cell.empty()) {
                const auto scale = scale_from_string(cell);
                if (!scale) {
                    reject("unknown scale '" + cell + "' (expected identity or log)");
                    continue;
                }
                record.scale = *scale;
            }
        }

        if (auto problem = record_problem(record)) {
            reject(*problem);
            continue;
        }
        batch.records.push_back(std::move(record));
    }
    return batch;
}

}  // namespace ancred::cli
