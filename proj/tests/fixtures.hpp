#pragma once

#include <string>
#include <vector>

#include "repbasis/builder.hpp"
#include "repbasis/target_function.hpp"

namespace repbasis::testing {

struct NamedTarget {
    std::string name;
    TargetFunction f;
};

inline TargetFunction constant(std::uint64_t value) { return TargetFunction(ExtCount(value)); }

/// f(n) = 0 for |n| <= delta, 1 otherwise (zero set of odd size 2*delta + 1).
inline TargetFunction odd_zero_block(std::int64_t delta) {
    return TargetFunction(-delta, delta, std::vector<ExtCount>(2 * delta + 1, ExtCount(0)), ExtCount(1));
}

/// f(n) = 0 for -delta <= n <= delta - 1, 1 otherwise (zero set of size 2*delta).
inline TargetFunction even_zero_block(std::int64_t delta) {
    if (delta == 0) return constant(1);
    return TargetFunction(-delta, delta - 1, std::vector<ExtCount>(2 * delta, ExtCount(0)), ExtCount(1));
}

/// f(0) = inf, f(n) = 1 otherwise.
inline TargetFunction infinite_at_zero() { return TargetFunction(0, 0, {ExtCount::infinity()}, ExtCount(1)); }

inline std::vector<NamedTarget> target_fixtures() {
    return {
        {"f=1", constant(1)},
        {"f=2", constant(2)},
        {"odd delta=1", odd_zero_block(1)},
        {"even delta=2", even_zero_block(2)},
        {"f(0)=inf", infinite_at_zero()},
    };
}

/// u_{2i-1} = delta + i, u_{2i} = -(delta + i); a U sequence for odd_zero_block(delta).
inline std::vector<std::int64_t> tight_odd_sequence(std::int64_t delta, std::size_t count) {
    std::vector<std::int64_t> u;
    for (std::int64_t i = 1; u.size() < count; ++i) {
        u.push_back(delta + i);
        if (u.size() < count) u.push_back(-(delta + i));
    }
    return u;
}

/// u_1 = delta, u_{2i} = delta + i, u_{2i+1} = -(delta + i); a U sequence for even_zero_block(delta).
inline std::vector<std::int64_t> tight_even_sequence(std::int64_t delta, std::size_t count) {
    std::vector<std::int64_t> u;
    if (count > 0) u.push_back(delta);
    for (std::int64_t i = 1; u.size() < count; ++i) {
        u.push_back(delta + i);
        if (u.size() < count) u.push_back(-(delta + i));
    }
    return u;
}

struct NamedPhi {
    std::string name;
    SparsityBound phi;
};

inline std::vector<NamedPhi> phi_fixtures() {
    return {
        {"phi=x", SparsityBound(PhiFamily::affine, {Rational(1), Rational(0)})},
        {"phi=2log2(1+x)", SparsityBound(PhiFamily::log_scaled, {Rational(2)})},
        {"phi=table", SparsityBound(PhiFamily::table, {Rational(0), Rational(10), Rational(100), Rational(10), Rational(1)})},
    };
}

/// phi large enough that w_k = 0 for every stage the tests build.
inline SparsityBound generous_phi() { return SparsityBound(PhiFamily::affine, {Rational(1), Rational(1000)}); }

inline std::vector<CSelectionPolicy> policy_fixtures() {
    return {
        {CSelectionPolicy::Mode::minimal, 0, 1000},
        {CSelectionPolicy::Mode::seeded_random, 1, 1000},
        {CSelectionPolicy::Mode::seeded_random, 2, 1000},
    };
}

inline BuilderConfig make_config(TargetFunction f, unsigned h, SparsityBound phi, CSelectionPolicy policy,
                                 std::uint64_t steps) {
    BuilderConfig config;
    config.f = std::move(f);
    config.h = h;
    config.phi = std::move(phi);
    config.policy = policy;
    config.max_steps = steps;
    return config;
}

}  // namespace repbasis::testing
