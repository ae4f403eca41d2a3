#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "repbasis/ext_count.hpp"
#include "repbasis/integer.hpp"

namespace repbasis {

/// Target representation function f: Z -> N0 ∪ {∞}, given by an explicit
/// window [lo, hi] of values plus a default used everywhere else.
///
/// The default must be at least 1, so the zero set of f lies inside the
/// window and is finite.
class TargetFunction {
public:
    /// f ≡ 1.
    TargetFunction() = default;

    /// Window-free function with constant value `fallback` (must be >= 1).
    explicit TargetFunction(ExtCount fallback);

    /// `values[i]` is f(lo + i); requires values.size() == hi - lo + 1.
    TargetFunction(std::int64_t lo, std::int64_t hi, std::vector<ExtCount> values, ExtCount fallback);

    ExtCount eval(const Int& n) const;
    ExtCount eval(std::int64_t n) const;

    /// Number of integers n with f(n) = 0.
    std::uint64_t delta() const;

    /// Smallest d >= 0 with f(n) >= 1 whenever |n| >= d.
    std::int64_t d0() const;

    bool has_window() const { return window_.has_value(); }
    std::int64_t window_lo() const { return window_->lo; }
    std::int64_t window_hi() const { return window_->hi; }
    const std::vector<ExtCount>& window_values() const { return window_->values; }
    ExtCount default_value() const { return default_; }

    friend bool operator==(const TargetFunction&, const TargetFunction&) = default;

private:
    struct Window {
        std::int64_t lo = 0;
        std::int64_t hi = -1;
        std::vector<ExtCount> values;
        friend bool operator==(const Window&, const Window&) = default;
    };

    std::optional<Window> window_;
    ExtCount default_ = 1;
};

}  // namespace repbasis
