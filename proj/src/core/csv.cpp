#include "csv.hpp"

namespace tablecast::csv {

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t");
    if (first == std::string_view::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(" \t");
    return s.substr(first, last - first + 1);
}

}  // namespace

bool split_line(std::string_view line, std::vector<std::string>& fields) {
    fields.clear();
    std::size_t i = 0;
    while (true) {
        // Skip leading blanks to detect a quoted field.
        std::size_t j = i;
        while (j < line.size() && (line[j] == ' ' || line[j] == '\t')) {
            ++j;
        }
        if (j < line.size() && line[j] == '"') {
            std::string value;
            ++j;
            bool closed = false;
            while (j < line.size()) {
                if (line[j] == '"') {
                    if (j + 1 < line.size() && line[j + 1] == '"') {
                        value += '"';
                        j += 2;
                        continue;
                    }
                    closed = true;
                    ++j;
                    break;
                }
                value += line[j++];
            }
            if (!closed) {
                return false;
            }
            const auto comma = line.find(',', j);
            if (!trim(line.substr(j, comma == std::string_view::npos ? line.npos : comma - j))
                     .empty()) {
                return false;
            }
            fields.push_back(std::move(value));
            if (comma == std::string_view::npos) {
                return true;
            }
            i = comma + 1;
        } else {
            const auto comma = line.find(',', i);
            if (comma == std::string_view::npos) {
                fields.emplace_back(trim(line.substr(i)));
                return true;
            }
            fields.emplace_back(trim(line.substr(i, comma - i)));
            i = comma + 1;
        }
    }
}

std::string escape(std::string_view field) {
    if (field.find_first_of(",\"\r\n") == std::string_view::npos) {
        return std::string(field);
    }
    std::string out = "\"";
    for (const char c : field) {
        if (c == '"') {
            out += '"';
        }
        out += c;
    }
    out += '"';
    return out;
}

std::string_view clean_line(std::string_view line, bool first_line) {
    if (first_line && line.starts_with("\xEF\xBB\xBF")) {
        line.remove_prefix(3);
    }
    if (!line.empty() && line.back() == '\r') {
        line.remove_suffix(1);
    }
    return line;
}

bool is_blank(std::string_view line) {
    return trim(line).empty();
}

}  // namespace tablecast::csv
