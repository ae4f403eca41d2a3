#include "repbasis/target_config.hpp"

#include <map>
#include <sstream>

namespace repbasis {

namespace {

std::string_view trim(std::string_view s) {
    const auto* ws = " \t\r";
    auto b = s.find_first_not_of(ws);
    if (b == std::string_view::npos) return {};
    auto e = s.find_last_not_of(ws);
    return s.substr(b, e - b + 1);
}

[[noreturn]] void fail(const ConfigEntry& entry, const std::string& message) {
    throw ConfigError("line " + std::to_string(entry.line) + " (" + entry.key + "): " + message);
}

std::vector<std::string> split_whitespace(std::string_view s) {
    std::vector<std::string> out;
    std::istringstream in{std::string(s)};
    for (std::string tok; in >> tok;) out.push_back(tok);
    return out;
}

std::int64_t parse_i64(const ConfigEntry& entry, std::string_view text) {
    try {
        return to_int64(parse_int(text));
    } catch (const std::exception& e) {
        fail(entry, e.what());
    }
}

}  // namespace

std::vector<ConfigEntry> parse_config_lines(std::string_view text) {
    std::vector<ConfigEntry> entries;
    std::size_t line_no = 0;
    while (!text.empty()) {
        auto nl = text.find('\n');
        std::string_view line = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;

        ConfigEntry entry;
        entry.line = line_no;
        auto eq = line.find('=');
        auto ws = line.find_first_of(" \t");
        if (eq != std::string_view::npos && trim(line.substr(0, eq)).find_first_of(" \t") == std::string_view::npos) {
            entry.key = std::string(trim(line.substr(0, eq)));
            entry.value = std::string(trim(line.substr(eq + 1)));
        } else if (ws != std::string_view::npos) {
            entry.key = std::string(line.substr(0, ws));
            entry.value = std::string(trim(line.substr(ws)));
        } else {
            entry.key = std::string(line);
        }
        entries.push_back(std::move(entry));
    }
    return entries;
}

TargetConfig parse_target_config(std::string_view text) {
    std::optional<std::int64_t> lo, hi;
    std::optional<ExtCount> fallback;
    std::optional<PhiFamily> family;
    std::optional<std::vector<Rational>> params;
    std::map<std::int64_t, std::pair<ExtCount, ConfigEntry>> values;
    TargetConfig config;

    for (auto& entry : parse_config_lines(text)) {
        try {
            if (entry.key == "window_lo") {
                lo = parse_i64(entry, entry.value);
            } else if (entry.key == "window_hi") {
                hi = parse_i64(entry, entry.value);
            } else if (entry.key == "default") {
                fallback = parse_ext_count(entry.value);
            } else if (entry.key == "value") {
                auto parts = split_whitespace(entry.value);
                if (parts.size() != 2) fail(entry, "expected 'value <n> <count|inf>'");
                std::int64_t n = parse_i64(entry, parts[0]);
                if (values.contains(n)) fail(entry, "duplicate value for n=" + parts[0]);
                values.emplace(n, std::make_pair(parse_ext_count(parts[1]), entry));
            } else if (entry.key == "phi_family") {
                family = parse_phi_family(entry.value);
            } else if (entry.key == "phi_params") {
                std::vector<Rational> list;
                std::string_view rest = entry.value;
                while (true) {
                    auto comma = rest.find(',');
                    list.push_back(parse_rational(trim(rest.substr(0, comma))));
                    if (comma == std::string_view::npos) break;
                    rest = rest.substr(comma + 1);
                }
                params = std::move(list);
            } else {
                config.extra.push_back(entry);
            }
        } catch (const ConfigError&) {
            throw;
        } catch (const std::exception& e) {
            fail(entry, e.what());
        }
    }

    ExtCount def = fallback.value_or(ExtCount(1));
    if (def < ExtCount(1)) throw ConfigError("default must be >= 1 so that f has finitely many zeros");

    if (lo.has_value() != hi.has_value()) throw ConfigError("window_lo and window_hi must be given together");
    if (lo) {
        if (*hi < *lo) {
            if (!values.empty()) throw ConfigError("value lines given for an empty window");
            config.f = TargetFunction(def);
        } else {
            std::vector<ExtCount> window(static_cast<std::size_t>(*hi - *lo) + 1, def);
            for (const auto& [n, item] : values) {
                if (n < *lo || n > *hi) fail(item.second, "n=" + std::to_string(n) + " lies outside the window");
                window[static_cast<std::size_t>(n - *lo)] = item.first;
            }
            config.f = TargetFunction(*lo, *hi, std::move(window), def);
        }
    } else {
        if (!values.empty()) throw ConfigError("value lines require window_lo and window_hi");
        config.f = TargetFunction(def);
    }

    if (family.has_value() != params.has_value()) {
        throw ConfigError("phi_family and phi_params must be given together");
    }
    if (family) {
        try {
            config.phi.emplace(*family, std::move(*params));
        } catch (const std::invalid_argument& e) {
            throw ConfigError(e.what());
        }
    }
    return config;
}

std::string render_target_config(const TargetFunction& f, const std::optional<SparsityBound>& phi) {
    std::ostringstream out;
    if (f.has_window()) {
        out << "window_lo = " << f.window_lo() << '\n';
        out << "window_hi = " << f.window_hi() << '\n';
        for (std::int64_t n = f.window_lo(); n <= f.window_hi(); ++n) {
            if (f.eval(n) != f.default_value()) out << "value " << n << ' ' << to_string(f.eval(n)) << '\n';
        }
    }
    out << "default = " << to_string(f.default_value()) << '\n';
    if (phi) {
        out << "phi_family = " << to_string(phi->family()) << '\n';
        out << "phi_params = " << phi->params_text() << '\n';
    }
    return out.str();
}

}  // namespace repbasis
