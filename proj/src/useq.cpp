#include "repbasis/useq.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace repbasis {

namespace {

std::uint64_t isqrt(std::uint64_t n) {
    auto root = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(n)));
    while (root * root > n) --root;
    while ((root + 1) * (root + 1) <= n) ++root;
    return root;
}

std::uint64_t magnitude(std::int64_t n) {
    return n < 0 ? static_cast<std::uint64_t>(-(n + 1)) + 1 : static_cast<std::uint64_t>(n);
}

}  // namespace

VIndex v_decompose(std::int64_t m) {
    if (m <= 0) throw std::invalid_argument("V index must be positive, got " + std::to_string(m));
    const auto um = static_cast<std::uint64_t>(m);
    // s^2 + 1 <= m <= (s + 1)^2
    const std::uint64_t s = isqrt(um - 1);
    const auto r = static_cast<std::int64_t>(um) - static_cast<std::int64_t>(s * s + s + 1);
    return {um, s, r};
}

std::uint64_t v_position(std::int64_t n, std::uint64_t occurrence) {
    const std::uint64_t s = magnitude(n) + occurrence - 1;
    return static_cast<std::uint64_t>(static_cast<std::int64_t>(s * s + s + 1) + n);
}

UTerm UStream::next() {
    while (true) {
        const VIndex v = v_decompose(static_cast<std::int64_t>(cursor_++));
        const std::uint64_t ordinal = v.s - magnitude(v.r) + 1;
        if (ExtCount(ordinal) <= f_.eval(v.r)) {
            return {++emitted_, v.m, v.r};
        }
    }
}

std::vector<std::int64_t> u_stream(const TargetFunction& f, std::uint64_t count) {
    UStream stream(f);
    std::vector<std::int64_t> out;
    out.reserve(count);
    for (std::uint64_t k = 0; k < count; ++k) out.push_back(stream.next().value);
    return out;
}

std::uint64_t u_bound(std::uint64_t k, std::uint64_t delta) { return (k + delta) / 2; }

bool u_bound_check(const TargetFunction& f, std::uint64_t count) {
    const std::uint64_t delta = f.delta();
    UStream stream(f);
    for (std::uint64_t k = 1; k <= count; ++k) {
        if (magnitude(stream.next().value) > u_bound(k, delta)) return false;
    }
    return true;
}

std::optional<std::uint64_t> last_occurrence_position(const TargetFunction& f, std::int64_t n) {
    const ExtCount fn = f.eval(n);
    if (fn.is_infinite() || fn.value() == 0) return std::nullopt;
    return v_position(n, fn.value());
}

}  // namespace repbasis
