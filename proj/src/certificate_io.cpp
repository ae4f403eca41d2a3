#include "repbasis/certificate_io.hpp"

#include <limits>
#include <sstream>

namespace repbasis {

namespace {

std::vector<std::string> fields(std::string_view value) {
    std::vector<std::string> out;
    std::istringstream in{std::string(value)};
    for (std::string tok; in >> tok;) out.push_back(tok);
    return out;
}

[[noreturn]] void fail(const ConfigEntry& entry, const std::string& message) {
    throw ConfigError("line " + std::to_string(entry.line) + " (" + entry.key + "): " + message);
}

std::uint64_t parse_u64(const ConfigEntry& entry, std::string_view text) {
    try {
        Int v = parse_int(text);
        if (v < 0 || v > std::numeric_limits<std::uint64_t>::max()) fail(entry, "out of range: " + std::string(text));
        return v.convert_to<std::uint64_t>();
    } catch (const std::invalid_argument& e) {
        fail(entry, e.what());
    }
}

std::optional<Int> parse_optional(const ConfigEntry& entry, const std::string& text) {
    if (text == "-") return std::nullopt;
    try {
        return parse_int(text);
    } catch (const std::invalid_argument& e) {
        fail(entry, e.what());
    }
}

StepRecord parse_step(const ConfigEntry& entry, unsigned h) {
    auto parts = fields(entry.value);
    if (parts.size() != 6) fail(entry, "expected k, u_k, decision, c_k, d_used, w_k");
    StepRecord rec;
    rec.k = parse_u64(entry, parts[0]);
    try {
        rec.u = to_int64(parse_int(parts[1]));
        rec.decision = parse_decision(parts[2]);
    } catch (const std::exception& e) {
        fail(entry, e.what());
    }
    rec.c = parse_optional(entry, parts[3]);
    rec.d_used = parse_optional(entry, parts[4]);
    auto w = parse_optional(entry, parts[5]);
    if (!w) fail(entry, "w_k is required");
    rec.w = *w;
    if (rec.c) rec.added = {-*rec.c, (h - 1) * *rec.c + rec.u};
    return rec;
}

struct Collected {
    BuilderConfig config;
    std::vector<ConfigEntry> steps;
    std::optional<ConfigEntry> set;
};

Collected collect(std::string_view text, bool certificate) {
    TargetConfig target = parse_target_config(text);
    Collected out;
    out.config.f = target.f;
    if (target.phi) out.config.phi = *target.phi;
    bool have_h = false;
    for (const auto& entry : target.extra) {
        try {
            if (entry.key == "h") {
                const std::uint64_t h = parse_u64(entry, entry.value);
                if (h > std::numeric_limits<unsigned>::max()) fail(entry, "h out of range");
                out.config.h = static_cast<unsigned>(h);
                have_h = true;
            } else if (entry.key == "steps") {
                out.config.max_steps = parse_u64(entry, entry.value);
            } else if (entry.key == "policy") {
                out.config.policy.mode = parse_policy_mode(entry.value);
            } else if (entry.key == "seed") {
                out.config.policy.seed = parse_u64(entry, entry.value);
            } else if (entry.key == "slack") {
                out.config.policy.slack_bound = parse_u64(entry, entry.value);
            } else if (certificate && entry.key == "step") {
                out.steps.push_back(entry);
            } else if (certificate && entry.key == "set") {
                if (out.set) fail(entry, "duplicate set line");
                out.set = entry;
            } else if (certificate && (entry.key == "check" || entry.key == "verdict")) {
                continue;
            } else {
                fail(entry, "unknown key");
            }
        } catch (const ConfigError&) {
            throw;
        } catch (const std::exception& e) {
            fail(entry, e.what());
        }
    }
    if (!have_h) throw ConfigError("missing h");
    try {
        out.config.validate();
    } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
    }
    return out;
}

}  // namespace

BuilderConfig parse_builder_config(std::string_view text) { return collect(text, false).config; }

std::string render_builder_config(const BuilderConfig& config) {
    std::ostringstream out;
    out << "h=" << config.h << '\n';
    out << "steps=" << config.max_steps << '\n';
    out << "policy=" << to_string(config.policy.mode) << '\n';
    if (config.policy.mode == CSelectionPolicy::Mode::seeded_random) {
        out << "seed=" << config.policy.seed << '\n';
        out << "slack=" << config.policy.slack_bound << '\n';
    }
    out << render_target_config(config.f, config.phi);
    return out.str();
}

std::string render_certificate(const Certificate& cert) {
    auto opt = [](const std::optional<Int>& v) { return v ? v->str() : std::string("-"); };
    std::ostringstream out;
    out << render_builder_config(cert.config);
    for (const auto& rec : cert.steps) {
        out << "step\t" << rec.k << '\t' << rec.u << '\t' << to_string(rec.decision) << '\t' << opt(rec.c) << '\t'
            << opt(rec.d_used) << '\t' << rec.w.str() << '\n';
    }
    out << "set";
    for (const auto& a : cert.set) out << '\t' << a.str();
    out << '\n';
    for (const auto& check : cert.checks) {
        out << "check\t" << check.name << '\t' << (check.passed ? "pass" : "fail") << '\t'
            << (check.witness.empty() ? "-" : check.witness) << '\n';
    }
    out << "verdict\t" << (cert.passed() ? "pass" : "fail") << '\n';
    return out.str();
}

CertificateInput parse_certificate(std::string_view text) {
    Collected collected = collect(text, true);
    CertificateInput input;
    input.config = collected.config;
    for (const auto& entry : collected.steps) input.steps.push_back(parse_step(entry, input.config.h));
    if (!collected.set) throw ConfigError("missing set line");
    std::vector<Int> elements;
    for (const auto& tok : fields(collected.set->value)) {
        try {
            elements.push_back(parse_int(tok));
        } catch (const std::invalid_argument& e) {
            fail(*collected.set, e.what());
        }
    }
    const std::size_t listed = elements.size();
    input.set = FiniteSet(std::move(elements));
    if (input.set.size() != listed) fail(*collected.set, "repeated element");
    return input;
}

}  // namespace repbasis
