#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "repbasis/repcount.hpp"
#include "repbasis/sparsity_bound.hpp"
#include "repbasis/target_function.hpp"
#include "repbasis/useq.hpp"

namespace repbasis {

/// How the extension constant c_k is picked among the admissible values.
struct CSelectionPolicy {
    enum class Mode { minimal, seeded_random };

    Mode mode = Mode::minimal;
    std::uint64_t seed = 0;
    /// Largest surplus added to the minimal admissible |c_k| in seeded mode.
    std::uint64_t slack_bound = 1000;

    friend bool operator==(const CSelectionPolicy&, const CSelectionPolicy&) = default;
};

std::string_view to_string(CSelectionPolicy::Mode mode);
CSelectionPolicy::Mode parse_policy_mode(std::string_view name);

struct BuilderConfig {
    TargetFunction f;
    unsigned h = 2;
    SparsityBound phi = SparsityBound::identity();
    CSelectionPolicy policy;
    std::uint64_t max_steps = 1;

    /// Throws std::invalid_argument ("h must be ≥ 2", ...).
    void validate() const;

    friend bool operator==(const BuilderConfig&, const BuilderConfig&) = default;
};

enum class Decision { seed, skip, extend };

std::string_view to_string(Decision decision);
Decision parse_decision(std::string_view name);

/// What happened at stage k. For seed and extend steps `added` is
/// {-c_k, (h-1)c_k + u_k}; skip steps add nothing and carry no c_k / d_used.
struct StepRecord {
    std::uint64_t k = 0;
    std::int64_t u = 0;
    Decision decision = Decision::skip;
    std::optional<Int> c;
    /// d0 for the seed step, d_{k-1} for extend steps.
    std::optional<Int> d_used;
    Int w = 0;
    std::vector<Int> added;

    friend bool operator==(const StepRecord&, const StepRecord&) = default;
};

/// A stage invariant failed after a step. The construction guarantees these,
/// so this signals a defect rather than bad input.
class InvariantViolation : public std::runtime_error {
public:
    InvariantViolation(std::string check, std::uint64_t k, const std::string& witness)
        : std::runtime_error(check + " violated at stage " + std::to_string(k) + ": " + witness),
          check_(std::move(check)),
          stage_(k) {}

    const std::string& check() const { return check_; }
    std::uint64_t stage() const { return stage_; }

private:
    std::string check_;
    std::uint64_t stage_;
};

struct BuilderState {
    explicit BuilderState(const TargetFunction& f) : cursor(f) {}

    std::uint64_t k = 0;
    FiniteSet set;
    /// d_{k-1} from the most recent extension (d0 after seeding).
    Int d_prev = 0;
    std::vector<StepRecord> history;
    UStream cursor;
    /// Occurrences of each value among u_1..u_k.
    std::map<std::int64_t, std::uint64_t> seen;
    std::mt19937_64 rng;
};

/// Signed extension constant: positive when u >= 0, negative otherwise, with
/// |c| = max(2hd + 1, w, 1) + surplus. The surplus is 0 in minimal mode and
/// uniform on [0, slack_bound] in seeded mode (drawn from `rng`).
Int choose_c(std::int64_t u, const Int& d, const Int& w, unsigned h, const CSelectionPolicy& policy,
             std::mt19937_64& rng);

/// Stage 1: A_1 = {-c_1, (h-1)c_1 + u_1} with |c_1| > 2h d0.
BuilderState seed_stage(const BuilderConfig& config);

/// Advances to stage k+1: skips when r_{A,h}(u_k) already covers the
/// multiplicity of u_k, otherwise adjoins {-c_k, (h-1)c_k + u_k}.
/// Throws InvariantViolation if a stage invariant fails afterwards.
void step(const BuilderConfig& config, BuilderState& state);

/// A(y, x): number of elements a with y <= a <= x.
std::size_t counting_fn(const FiniteSet& set, const Int& y, const Int& x);

struct CheckResult {
    std::string name;
    bool passed = true;
    std::string witness;
};

/// Independent verification of a finished build.
struct Certificate {
    BuilderConfig config;
    FiniteSet set;
    std::vector<StepRecord> steps;
    std::vector<CheckResult> checks;

    bool passed() const;
    const CheckResult* find(std::string_view name) const;
};

/// Replays every stage from `history` and re-checks it with the repcount
/// oracles only. Failures land in the certificate, nothing is thrown.
Certificate verify(const FiniteSet& set, const std::vector<StepRecord>& history, const BuilderConfig& config);

struct BuildResult {
    FiniteSet set;
    Certificate certificate;
};

/// seed_stage, then step until stage max_steps, then verify.
BuildResult build(const BuilderConfig& config);

}  // namespace repbasis
