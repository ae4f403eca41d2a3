#include "repbasis/integer.hpp"

#include <limits>
#include <stdexcept>

namespace repbasis {

namespace {

bool is_decimal(std::string_view text) {
    if (!text.empty() && (text.front() == '-' || text.front() == '+')) text.remove_prefix(1);
    if (text.empty()) return false;
    for (char ch : text) {
        if (ch < '0' || ch > '9') return false;
    }
    return true;
}

}  // namespace

Int parse_int(std::string_view text) {
    if (!is_decimal(text)) {
        throw std::invalid_argument("malformed integer '" + std::string(text) + "'");
    }
    bool negative = text.front() == '-';
    if (text.front() == '-' || text.front() == '+') text.remove_prefix(1);
    Int value{std::string(text)};
    return negative ? Int(-value) : value;
}

Rational parse_rational(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_int(text));
    Int num = parse_int(text.substr(0, slash));
    Int den = parse_int(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    return Rational(num, den);
}

std::string to_string(const Int& value) { return value.str(); }

std::string to_string(const Rational& value) {
    auto den = boost::multiprecision::denominator(value);
    if (den == 1) return boost::multiprecision::numerator(value).str();
    return boost::multiprecision::numerator(value).str() + "/" + den.str();
}

std::int64_t to_int64(const Int& value) {
    if (value > std::numeric_limits<std::int64_t>::max() ||
        value < std::numeric_limits<std::int64_t>::min()) {
        throw std::overflow_error("integer " + value.str() + " does not fit in 64 bits");
    }
    return value.convert_to<std::int64_t>();
}

}  // namespace repbasis
