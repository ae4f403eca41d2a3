#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "repbasis/sparsity_bound.hpp"
#include "repbasis/target_function.hpp"

namespace repbasis {

class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// One `key = value` (or `key value`) line. Blank lines and `#` comments are dropped.
struct ConfigEntry {
    std::string key;
    std::string value;
    std::size_t line = 0;
};

std::vector<ConfigEntry> parse_config_lines(std::string_view text);

/// Target function and optional sparsity bound read from config text.
/// Keys not belonging to either are kept in `extra`, in file order.
struct TargetConfig {
    TargetFunction f;
    std::optional<SparsityBound> phi;
    std::vector<ConfigEntry> extra;
};

/// Keys: window_lo, window_hi, value <n> <count|inf>, default <count|inf>,
/// phi_family, phi_params. Throws ConfigError naming the offending line.
TargetConfig parse_target_config(std::string_view text);

/// Inverse of parse_target_config for the f / phi keys. Only window entries
/// that differ from the default are written as `value` lines.
std::string render_target_config(const TargetFunction& f, const std::optional<SparsityBound>& phi);

}  // namespace repbasis
