#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "repbasis/target_function.hpp"

namespace repbasis {

/// Position m of the sequence V = 0, -1,0,1, -2,-1,0,1,2, ... written as
/// m = s^2 + s + 1 + r with |r| <= s. The V term at m is r.
struct VIndex {
    std::uint64_t m = 1;
    std::uint64_t s = 0;
    std::int64_t r = 0;

    friend bool operator==(const VIndex&, const VIndex&) = default;
};

/// Throws std::invalid_argument for m <= 0.
VIndex v_decompose(std::int64_t m);

/// V position of the j-th occurrence (j >= 1) of value n: s = |n| + j - 1.
std::uint64_t v_position(std::int64_t n, std::uint64_t occurrence);

/// One emitted term u_k, together with the V position it came from.
struct UTerm {
    std::uint64_t k = 0;
    std::uint64_t m = 0;
    std::int64_t value = 0;
};

/// Resumable enumerator of the subsequence U of V in which each integer n
/// occurs exactly f(n) times. A V position (s, r) is admitted iff its
/// occurrence ordinal s - |r| + 1 is at most f(r).
class UStream {
public:
    explicit UStream(TargetFunction f) : f_(std::move(f)) {}

    UTerm next();

    std::uint64_t emitted() const { return emitted_; }
    std::uint64_t cursor() const { return cursor_; }
    const TargetFunction& target() const { return f_; }

private:
    TargetFunction f_;
    std::uint64_t cursor_ = 1;
    std::uint64_t emitted_ = 0;
};

/// u_1, ..., u_K.
std::vector<std::int64_t> u_stream(const TargetFunction& f, std::uint64_t count);

/// floor((k + delta) / 2).
std::uint64_t u_bound(std::uint64_t k, std::uint64_t delta);

/// |u_k| <= floor((k + delta(f)) / 2) for every k <= K.
bool u_bound_check(const TargetFunction& f, std::uint64_t count);

/// V position of the last admitted occurrence of n, or nullopt when
/// f(n) is 0 or infinite.
std::optional<std::uint64_t> last_occurrence_position(const TargetFunction& f, std::int64_t n);

}  // namespace repbasis
