#include "coauth/csv.hpp"

#include "coauth/error.hpp"

namespace coauth::io {

std::string csv_field(std::string_view s) {
    if (s.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(s);
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

std::optional<std::vector<std::string>> read_csv_record(std::istream& in, std::size_t& line) {
    std::string physical;
    if (!std::getline(in, physical)) return std::nullopt;
    ++line;
    const std::size_t start_line = line;

    std::vector<std::string> fields;
    std::string field;
    bool in_quotes = false;
    bool was_quoted = false;
    for (;;) {
        if (!physical.empty() && physical.back() == '\r') physical.pop_back();
        for (std::size_t i = 0; i < physical.size(); ++i) {
            const char c = physical[i];
            if (in_quotes) {
                if (c == '"') {
                    if (i + 1 < physical.size() && physical[i + 1] == '"') {
                        field += '"';
                        ++i;
                    } else {
                        in_quotes = false;
                    }
                } else {
                    field += c;
                }
            } else if (c == ',') {
                fields.push_back(std::move(field));
                field.clear();
                was_quoted = false;
            } else if (c == '"') {
                if (!field.empty() || was_quoted) throw ParseError(line, "unexpected quote inside field");
                in_quotes = true;
                was_quoted = true;
            } else {
                if (was_quoted) throw ParseError(line, "text after closing quote");
                field += c;
            }
        }
        if (!in_quotes) break;
        if (!std::getline(in, physical))
            throw ParseError(start_line, "unterminated quoted field");
        ++line;
        field += '\n';
    }
    fields.push_back(std::move(field));
    return fields;
}

}  // namespace coauth::io
