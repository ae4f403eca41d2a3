#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace repbasis {

/// A value of N0 ∪ {∞}. Every finite value compares below infinity.
class ExtCount {
public:
    constexpr ExtCount() = default;
    constexpr ExtCount(std::uint64_t value) : value_(value) {}  // NOLINT(google-explicit-constructor)

    static constexpr ExtCount infinity() {
        ExtCount c;
        c.value_.reset();
        return c;
    }

    constexpr bool is_infinite() const { return !value_.has_value(); }
    constexpr bool is_finite() const { return value_.has_value(); }

    /// Finite value; precondition is_finite().
    constexpr std::uint64_t value() const { return *value_; }

    friend constexpr bool operator==(const ExtCount& a, const ExtCount& b) = default;

    friend constexpr std::strong_ordering operator<=>(const ExtCount& a, const ExtCount& b) {
        if (a.is_infinite() || b.is_infinite()) {
            return a.is_infinite() <=> b.is_infinite();
        }
        return *a.value_ <=> *b.value_;
    }

private:
    std::optional<std::uint64_t> value_ = std::uint64_t{0};
};

/// Renders as a decimal count or the literal "inf".
std::string to_string(const ExtCount& count);

/// Accepts a decimal count or "inf". Throws std::invalid_argument.
ExtCount parse_ext_count(std::string_view text);

}  // namespace repbasis
