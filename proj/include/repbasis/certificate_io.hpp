#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "repbasis/builder.hpp"
#include "repbasis/target_config.hpp"

namespace repbasis {

/// Builder config file: the target-function keys plus
///   h, steps, policy (minimal | seeded-random), seed, slack.
/// phi defaults to affine 1,0 (phi(x) = x) when absent. Throws ConfigError.
BuilderConfig parse_builder_config(std::string_view text);

std::string render_builder_config(const BuilderConfig& config);

/// Text certificate:
///   h=, steps=, policy= (seed=, slack= for seeded builds), target-function keys,
///   one `step` line per stage (k, u_k, decision, c_k, d_used, w_k; "-" when absent),
///   `set` with the sorted elements, `check` lines (name, pass|fail, witness), `verdict`.
/// Fields are tab separated, lines end in LF.
std::string render_certificate(const Certificate& cert);

struct CertificateInput {
    BuilderConfig config;
    FiniteSet set;
    std::vector<StepRecord> steps;
};

/// Reads back the config, step and set lines; check and verdict lines are
/// ignored because verification recomputes them. Throws ConfigError.
CertificateInput parse_certificate(std::string_view text);

}  // namespace repbasis
