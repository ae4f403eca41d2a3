#include "repbasis/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "repbasis/certificate_io.hpp"

namespace repbasis::cli {

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot read '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

FiniteSet parse_set(const std::string& text) {
    std::vector<Int> elements;
    std::string_view rest = text;
    while (!rest.empty()) {
        auto comma = rest.find(',');
        std::string_view tok = rest.substr(0, comma);
        while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
        while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
        try {
            elements.push_back(parse_int(tok));
        } catch (const std::invalid_argument& e) {
            throw UsageError(std::string("--set: ") + e.what());
        }
        if (comma == std::string_view::npos) break;
        rest = rest.substr(comma + 1);
    }
    return FiniteSet(std::move(elements));
}

int emit_build(const RunConfig& config, std::ostream& out, std::ostream& err) {
    BuildResult result;
    try {
        result = build(config.builder);
    } catch (const InvariantViolation& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    const std::string text = render_certificate(result.certificate);
    if (config.out_path) {
        std::ofstream file(*config.out_path, std::ios::binary);
        if (!file || !(file << text) || !file.flush()) {
            err << "error: cannot write '" << *config.out_path << "'\n";
            return 2;
        }
    } else {
        out << text;
    }
    const bool passed = result.certificate.passed();
    err << "verdict " << (passed ? "pass" : "fail") << ", |A|=" << result.set.size() << '\n';
    return passed ? 0 : 1;
}

int emit_verify(const RunConfig& config, std::ostream& out, std::ostream& err) {
    CertificateInput input;
    try {
        input = parse_certificate(read_file(config.certificate_path));
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const ConfigError& e) {
        err << "error: " << config.certificate_path << ": " << e.what() << '\n';
        return 2;
    }
    const Certificate cert = verify(input.set, input.steps, input.config);
    for (const auto& check : cert.checks) {
        out << "check\t" << check.name << '\t' << (check.passed ? "pass" : "fail") << '\t'
            << (check.witness.empty() ? "-" : check.witness) << '\n';
        if (!check.passed) err << "failed check: " << check.name << " (" << check.witness << ")\n";
    }
    out << "verdict\t" << (cert.passed() ? "pass" : "fail") << '\n';
    return cert.passed() ? 0 : 1;
}

int emit_useq(const RunConfig& config, std::ostream& out) {
    const std::uint64_t delta = config.target.delta();
    UStream stream(config.target);
    for (std::uint64_t i = 0; i < config.count; ++i) {
        const UTerm term = stream.next();
        out << term.k << '\t' << term.value << '\t' << u_bound(term.k, delta) << '\n';
    }
    return 0;
}

int emit_count(const RunConfig& config, std::ostream& out) {
    out << "n\tr\tR\tr_hat\tR_hat\n";
    auto row = [&](const Int& n) {
        out << n.str() << '\t' << count_unordered(config.set, config.order, n) << '\t'
            << count_ordered(config.set, config.order, n) << '\t' << count_restricted(config.set, config.order, n)
            << '\t' << count_restricted_ordered(config.set, config.order, n) << '\n';
    };
    if (config.n) {
        row(*config.n);
    } else if (!config.set.empty()) {
        for (const auto& [n, r] : histogram(config.set, config.order).counts) row(n);
    }
    return 0;
}

}  // namespace

RunConfig parse_args(const std::vector<std::string>& args) {
    CLI::App app{"Sparse additive bases with a prescribed representation function", "repbasis"};
    app.require_subcommand(1);

    std::string config_path, out_path, cert_path, set_text, n_text;
    std::uint64_t count = 0;
    unsigned order = 0;
    bool want_histogram = false;

    auto* build_cmd = app.add_subcommand("build", "Construct stages A_1..A_K and write a certificate");
    build_cmd->add_option("--config", config_path, "Builder config file")->required();
    build_cmd->add_option("--out", out_path, "Certificate output file (default: stdout)");

    auto* verify_cmd = app.add_subcommand("verify", "Replay every check of a certificate");
    verify_cmd->add_option("certificate", cert_path, "Certificate file")->required();

    auto* useq_cmd = app.add_subcommand("useq", "Print k, u_k, floor((k+delta)/2) as TSV");
    useq_cmd->add_option("--config", config_path, "Target function config file")->required();
    useq_cmd->add_option("--count", count, "Number of terms")->required()->check(CLI::PositiveNumber);

    auto* count_cmd = app.add_subcommand("count", "Representation counts of a finite set");
    count_cmd->add_option("--set", set_text, "Comma-separated integers")->required();
    count_cmd->add_option("--order", order, "Order h >= 1")->required()->check(CLI::PositiveNumber);
    auto* n_opt = count_cmd->add_option("--n", n_text, "Single integer to count");
    auto* hist_opt = count_cmd->add_flag("--histogram", want_histogram, "All n in hA as TSV");
    n_opt->excludes(hist_opt);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        std::ostringstream text, ignored;
        app.exit(e, text, ignored);
        RunConfig help;
        help.help_text = text.str();
        return help;
    } catch (const CLI::ParseError& e) {
        throw UsageError(e.what());
    }

    RunConfig config;
    if (build_cmd->parsed()) {
        config.subcommand = Subcommand::build;
        config.config_path = config_path;
        if (!out_path.empty()) config.out_path = out_path;
        try {
            config.builder = parse_builder_config(read_file(config_path));
        } catch (const ConfigError& e) {
            throw UsageError(config_path + ": " + e.what());
        }
    } else if (verify_cmd->parsed()) {
        config.subcommand = Subcommand::verify;
        config.certificate_path = cert_path;
    } else if (useq_cmd->parsed()) {
        config.subcommand = Subcommand::useq;
        config.config_path = config_path;
        config.count = count;
        try {
            config.target = parse_target_config(read_file(config_path)).f;
        } catch (const ConfigError& e) {
            throw UsageError(config_path + ": " + e.what());
        }
    } else if (count_cmd->parsed()) {
        config.subcommand = Subcommand::count;
        config.set = parse_set(set_text);
        config.order = order;
        config.histogram = want_histogram;
        if (!n_opt->empty()) {
            try {
                config.n = parse_int(n_text);
            } catch (const std::invalid_argument& e) {
                throw UsageError(std::string("--n: ") + e.what());
            }
        } else if (!want_histogram) {
            throw UsageError("count needs --n or --histogram");
        }
    }
    return config;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
    switch (config.subcommand) {
        case Subcommand::build: return emit_build(config, out, err);
        case Subcommand::verify: return emit_verify(config, out, err);
        case Subcommand::useq: return emit_useq(config, out);
        case Subcommand::count: return emit_count(config, out);
        case Subcommand::help: out << config.help_text; return 0;
    }
    return 2;
}

int main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    RunConfig config;
    try {
        config = parse_args(args);
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return 2;
    }
    return run(config, out, err);
}

}  // namespace repbasis::cli
