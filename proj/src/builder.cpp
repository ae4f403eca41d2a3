#include "repbasis/builder.hpp"

#include <algorithm>
#include <limits>

namespace repbasis {

namespace {

// Uniform draw on [0, bound] by rejection, so seeded builds do not depend on
// the standard library's distribution implementation.
std::uint64_t draw_surplus(std::mt19937_64& rng, std::uint64_t bound) {
    if (bound == std::numeric_limits<std::uint64_t>::max()) return rng();
    const std::uint64_t range = bound + 1;
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % range;
    std::uint64_t x = rng();
    while (x >= limit) x = rng();
    return x % range;
}

std::string describe(const Int& n, Count have, const std::string& relation, const std::string& bound) {
    return "n=" + n.str() + " r=" + std::to_string(have) + " " + relation + " " + bound;
}

// Conditions (i), (ii), (iii), (iv) for the current stage.
void check_stage(const BuilderConfig& config, const BuilderState& state, const RepHistogram& hist) {
    for (const auto& [n, r] : hist.counts) {
        const ExtCount fn = config.f.eval(n);
        if (ExtCount(r) > fn) throw InvariantViolation("cond_i", state.k, describe(n, r, ">", "f=" + to_string(fn)));
    }
    for (const auto& [n, need] : state.seen) {
        const Count r = hist.at(n);
        if (r < need) throw InvariantViolation("cond_ii", state.k, describe(n, r, "<", std::to_string(need)));
    }
    if (state.set.size() > 2 * state.k) {
        throw InvariantViolation("cond_iii", state.k, "|A|=" + std::to_string(state.set.size()));
    }
    if (auto n = sidon_collision(state.set, config.h - 1)) {
        throw InvariantViolation("cond_iv", state.k, "repeated sum " + n->str());
    }
}

}  // namespace

std::string_view to_string(CSelectionPolicy::Mode mode) {
    return mode == CSelectionPolicy::Mode::minimal ? "minimal" : "seeded-random";
}

CSelectionPolicy::Mode parse_policy_mode(std::string_view name) {
    if (name == "minimal") return CSelectionPolicy::Mode::minimal;
    if (name == "seeded-random") return CSelectionPolicy::Mode::seeded_random;
    throw std::invalid_argument("unknown policy '" + std::string(name) + "'");
}

std::string_view to_string(Decision decision) {
    switch (decision) {
        case Decision::seed: return "seed";
        case Decision::skip: return "skip";
        case Decision::extend: return "extend";
    }
    return "?";
}

Decision parse_decision(std::string_view name) {
    if (name == "seed") return Decision::seed;
    if (name == "skip") return Decision::skip;
    if (name == "extend") return Decision::extend;
    throw std::invalid_argument("unknown decision '" + std::string(name) + "'");
}

void BuilderConfig::validate() const {
    if (h < 2) throw std::invalid_argument("h must be ≥ 2");
    if (max_steps < 1) throw std::invalid_argument("steps must be ≥ 1");
    if (policy.mode == CSelectionPolicy::Mode::seeded_random && policy.slack_bound < 1) {
        throw std::invalid_argument("slack must be ≥ 1");
    }
}

Int choose_c(std::int64_t u, const Int& d, const Int& w, unsigned h, const CSelectionPolicy& policy,
             std::mt19937_64& rng) {
    Int magnitude = std::max({2 * Int(h) * d + 1, w, Int(1)});
    if (policy.mode == CSelectionPolicy::Mode::seeded_random) magnitude += draw_surplus(rng, policy.slack_bound);
    return u >= 0 ? magnitude : Int(-magnitude);
}

BuilderState seed_stage(const BuilderConfig& config) {
    config.validate();
    BuilderState state(config.f);
    state.rng.seed(config.policy.seed);

    const UTerm first = state.cursor.next();
    state.k = 1;
    state.seen[first.value] = 1;

    const Int d0 = config.f.d0();
    const Int w = sparsity_threshold(config.phi, 1);
    const Int c = choose_c(first.value, d0, w, config.h, config.policy, state.rng);

    StepRecord record{1, first.value, Decision::seed, c, d0, w, {-c, (config.h - 1) * c + first.value}};
    for (const auto& a : record.added) state.set.insert(a);
    state.d_prev = d0;
    state.history.push_back(std::move(record));

    const RepHistogram hist = histogram(state.set, config.h);
    for (const auto& [n, r] : hist.counts) {
        if (r != 1) throw InvariantViolation("seed_sidon", 1, describe(n, r, "!=", "1"));
    }
    check_stage(config, state, hist);
    return state;
}

void step(const BuilderConfig& config, BuilderState& state) {
    const UTerm term = state.cursor.next();
    const std::int64_t u = term.value;
    state.k = term.k;
    const std::uint64_t need = ++state.seen[u];
    const Count have = count_unordered(state.set, config.h, u);
    const Int w = sparsity_threshold(config.phi, state.k);

    if (have >= need) {
        state.history.push_back({state.k, u, Decision::skip, std::nullopt, std::nullopt, w, {}});
        check_stage(config, state, histogram(state.set, config.h));
        return;
    }
    if (have + 1 != need) {
        throw InvariantViolation("cond_ii", state.k - 1, describe(u, have, "<", std::to_string(need - 1)));
    }

    const Int d = std::max(state.set.max_abs(), abs_value(Int(u)));
    const Int c = choose_c(u, d, w, config.h, config.policy, state.rng);
    const RepHistogram before = histogram(state.set, config.h);
    const FiniteSet previous = state.set;

    StepRecord record{state.k, u, Decision::extend, c, d, w, {-c, (config.h - 1) * c + u}};
    for (const auto& a : record.added) {
        if (!state.set.insert(a)) throw InvariantViolation("cond_iii", state.k, "element " + a.str() + " already present");
    }
    state.d_prev = d;
    state.history.push_back(std::move(record));

    const RepHistogram after = histogram(state.set, config.h);
    for (const auto& [n, r] : after.counts) {
        Count expected = 1;
        if (n == u) {
            expected = before.at(n) + 1;
        } else if (auto it = before.counts.find(n); it != before.counts.end()) {
            expected = it->second;
        }
        if (r != expected) throw InvariantViolation("increment_replay", state.k, describe(n, r, "!=", std::to_string(expected)));
    }
    if (!state.set.includes(previous)) throw InvariantViolation("monotone", state.k, "A_{k-1} not contained in A_k");
    check_stage(config, state, after);
}

std::size_t counting_fn(const FiniteSet& set, const Int& y, const Int& x) {
    if (x < y) return 0;
    auto lo = std::lower_bound(set.begin(), set.end(), y);
    auto hi = std::upper_bound(set.begin(), set.end(), x);
    return static_cast<std::size_t>(hi - lo);
}

BuildResult build(const BuilderConfig& config) {
    BuilderState state = seed_stage(config);
    while (state.k < config.max_steps) step(config, state);
    Certificate cert = verify(state.set, state.history, config);
    return {state.set, std::move(cert)};
}

}  // namespace repbasis
