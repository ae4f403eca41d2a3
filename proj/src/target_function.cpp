#include "repbasis/target_function.hpp"

#include <cstdlib>
#include <stdexcept>
#include <string>

namespace repbasis {

std::string to_string(const ExtCount& count) {
    return count.is_infinite() ? std::string("inf") : std::to_string(count.value());
}

ExtCount parse_ext_count(std::string_view text) {
    if (text == "inf") return ExtCount::infinity();
    if (text.empty() || text.size() > 19) {
        throw std::invalid_argument("malformed count '" + std::string(text) + "'");
    }
    std::uint64_t value = 0;
    for (char ch : text) {
        if (ch < '0' || ch > '9') throw std::invalid_argument("malformed count '" + std::string(text) + "'");
        value = value * 10 + static_cast<std::uint64_t>(ch - '0');
    }
    return ExtCount(value);
}

TargetFunction::TargetFunction(ExtCount fallback) : default_(fallback) {
    if (fallback < ExtCount(1)) throw std::invalid_argument("default value of f must be >= 1");
}

TargetFunction::TargetFunction(std::int64_t lo, std::int64_t hi, std::vector<ExtCount> values,
                               ExtCount fallback)
    : TargetFunction(fallback) {
    if (hi < lo) {
        if (!values.empty()) throw std::invalid_argument("empty window cannot carry values");
        return;
    }
    if (values.size() != static_cast<std::size_t>(hi - lo) + 1) {
        throw std::invalid_argument("window [" + std::to_string(lo) + ", " + std::to_string(hi) +
                                    "] needs " + std::to_string(hi - lo + 1) + " values");
    }
    window_ = Window{lo, hi, std::move(values)};
}

ExtCount TargetFunction::eval(std::int64_t n) const {
    if (window_ && n >= window_->lo && n <= window_->hi) {
        return window_->values[static_cast<std::size_t>(n - window_->lo)];
    }
    return default_;
}

ExtCount TargetFunction::eval(const Int& n) const {
    if (!window_ || n < window_->lo || n > window_->hi) return default_;
    return eval(n.convert_to<std::int64_t>());
}

std::uint64_t TargetFunction::delta() const {
    if (!window_) return 0;
    std::uint64_t zeros = 0;
    for (const auto& v : window_->values) {
        if (v == ExtCount(0)) ++zeros;
    }
    return zeros;
}

std::int64_t TargetFunction::d0() const {
    if (!window_) return 0;
    std::int64_t outermost = -1;
    for (std::int64_t n = window_->lo; n <= window_->hi; ++n) {
        if (eval(n) == ExtCount(0)) outermost = std::max(outermost, n < 0 ? -n : n);
    }
    return outermost + 1;
}

}  // namespace repbasis
