#pragma once

// Canned certificate corruptions used by the CLI tests and the acceptance run.

#include <sstream>
#include <string>
#include <vector>

#include "repbasis/integer.hpp"

namespace repbasis::testing {

inline std::vector<std::string> split_lines(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) lines.push_back(line);
    return lines;
}

inline std::string join_lines(const std::vector<std::string>& lines) {
    std::string out;
    for (const auto& l : lines) out += l + "\n";
    return out;
}

inline std::vector<std::string> tab_fields(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream in(line);
    for (std::string f; std::getline(in, f, '\t');) out.push_back(f);
    return out;
}

inline std::string join_tabs(const std::vector<std::string>& fields) {
    std::string out;
    for (std::size_t i = 0; i < fields.size(); ++i) out += (i ? "\t" : "") + fields[i];
    return out;
}

/// Appends max(|a|) + 1 to the set line.
inline std::string tamper_extra_element(const std::string& cert) {
    auto lines = split_lines(cert);
    for (auto& line : lines) {
        if (line.rfind("set", 0) != 0) continue;
        Int biggest = 0;
        for (const auto& f : tab_fields(line)) {
            if (f != "set") biggest = std::max(biggest, abs_value(parse_int(f)));
        }
        line += "\t" + Int(biggest + 1).str();
    }
    return join_lines(lines);
}

/// Adds one to |c_k| on the last step line that carries a c_k.
inline std::string tamper_c(const std::string& cert) {
    auto lines = split_lines(cert);
    for (auto it = lines.rbegin(); it != lines.rend(); ++it) {
        if (it->rfind("step\t", 0) != 0) continue;
        auto fields = tab_fields(*it);
        if (fields[4] == "-") continue;
        Int c = parse_int(fields[4]);
        fields[4] = (c > 0 ? Int(c + 1) : Int(c - 1)).str();
        *it = join_tabs(fields);
        break;
    }
    return join_lines(lines);
}

/// Drops the last step line.
inline std::string tamper_delete_step(const std::string& cert) {
    auto lines = split_lines(cert);
    for (auto it = lines.rbegin(); it != lines.rend(); ++it) {
        if (it->rfind("step\t", 0) == 0) {
            lines.erase(std::next(it).base());
            break;
        }
    }
    return join_lines(lines);
}

}  // namespace repbasis::testing
