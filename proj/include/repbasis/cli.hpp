#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "repbasis/builder.hpp"

namespace repbasis::cli {

enum class Subcommand { build, verify, useq, count, help };

/// Bad flags, bad values, or unreadable inputs. Maps to exit code 2.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct RunConfig {
    Subcommand subcommand = Subcommand::help;
    std::string help_text;

    // build
    std::string config_path;
    std::optional<std::string> out_path;
    BuilderConfig builder;

    // verify
    std::string certificate_path;

    // useq
    TargetFunction target;
    std::uint64_t count = 0;

    // count
    FiniteSet set;
    unsigned order = 1;
    std::optional<Int> n;
    bool histogram = false;
};

/// `args` excludes the program name. Reads and validates the config file for
/// build and useq. Throws UsageError naming the offending flag or value.
RunConfig parse_args(const std::vector<std::string>& args);

/// 0 on success (and a passing verdict), 1 on a failing verdict, 2 on IO errors.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// parse_args + run with the usage-error exit code applied.
int main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace repbasis::cli
