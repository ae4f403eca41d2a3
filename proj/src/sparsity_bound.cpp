#include "repbasis/sparsity_bound.hpp"

#include <cmath>
#include <stdexcept>

namespace repbasis {

namespace mp = boost::multiprecision;

namespace {

constexpr unsigned kMaxExponentPart = 64;

void require(bool ok, const std::string& message) {
    if (!ok) throw std::invalid_argument("phi: " + message);
}

unsigned small_unsigned(const Int& value) { return value.convert_to<unsigned>(); }

// x^e >= y for x >= 0, y > 0, e = p/q > 0  <=>  x^p * den(y)^q >= num(y)^q.
bool power_at_least(const Int& x, const Rational& e, const Rational& y) {
    unsigned p = small_unsigned(mp::numerator(e));
    unsigned q = small_unsigned(mp::denominator(e));
    Int lhs = mp::pow(x, p) * mp::pow(Int(mp::denominator(y)), q);
    Int rhs = mp::pow(Int(mp::numerator(y)), q);
    return lhs >= rhs;
}

// log2(1 + x) >= y for x >= 0, y > 0  <=>  (1 + x)^q >= 2^p with y = p/q.
bool log2_at_least(const Int& x, const Rational& y) {
    Int base = x + 1;
    Int p = mp::numerator(y);
    Int q = mp::denominator(y);
    // 2^L <= base < 2^(L+1)
    Int msb = Int(mp::msb(base));
    if (msb * q >= p) return true;
    if ((msb + 1) * q <= p) return false;
    unsigned qs = small_unsigned(q);
    return mp::pow(base, qs) >= (Int(1) << small_unsigned(p));
}

bool rational_is_integer(const Rational& r) { return mp::denominator(r) == 1; }

}  // namespace

std::string_view to_string(PhiFamily family) {
    switch (family) {
        case PhiFamily::log_scaled: return "log-scaled";
        case PhiFamily::power: return "power";
        case PhiFamily::affine: return "affine";
        case PhiFamily::table: return "table";
    }
    return "?";
}

PhiFamily parse_phi_family(std::string_view name) {
    if (name == "log-scaled") return PhiFamily::log_scaled;
    if (name == "power") return PhiFamily::power;
    if (name == "affine") return PhiFamily::affine;
    if (name == "table") return PhiFamily::table;
    throw std::invalid_argument("unknown phi_family '" + std::string(name) + "'");
}

SparsityBound::SparsityBound(PhiFamily family, std::vector<Rational> params)
    : family_(family), params_(std::move(params)) {
    switch (family_) {
        case PhiFamily::log_scaled:
            require(params_.size() == 1 || params_.size() == 2, "log-scaled takes a[,b]");
            if (params_.size() == 1) params_.emplace_back(0);
            require(params_[0] > 0, "log-scaled needs a > 0");
            require(params_[1] >= 0, "log-scaled needs b >= 0");
            break;
        case PhiFamily::power:
            require(params_.size() == 2 || params_.size() == 3, "power takes a,e[,b]");
            if (params_.size() == 2) params_.emplace_back(0);
            require(params_[0] > 0, "power needs a > 0");
            require(params_[1] > 0, "power needs e > 0");
            require(mp::numerator(params_[1]) <= kMaxExponentPart &&
                        mp::denominator(params_[1]) <= kMaxExponentPart,
                    "power exponent numerator and denominator must be <= 64");
            require(params_[2] >= 0, "power needs b >= 0");
            break;
        case PhiFamily::affine:
            require(params_.size() == 2, "affine takes slope,intercept");
            require(params_[0] > 0, "affine needs slope > 0");
            require(params_[1] >= 0, "affine needs intercept >= 0");
            break;
        case PhiFamily::table: {
            require(params_.size() >= 3 && params_.size() % 2 == 1, "table takes x1,v1,...,xm,vm,slope");
            std::size_t points = params_.size() / 2;
            require(params_[0] == 0, "table must start at x1 = 0");
            require(params_[1] >= 0, "table values must be >= 0");
            for (std::size_t i = 0; i < points; ++i) {
                require(rational_is_integer(params_[2 * i]), "table breakpoints must be integers");
                if (i > 0) {
                    require(params_[2 * i] > params_[2 * i - 2], "table breakpoints must increase");
                    require(params_[2 * i + 1] >= params_[2 * i - 1], "table values must be nondecreasing");
                }
            }
            require(params_.back() > 0, "table needs a positive final slope");
            break;
        }
    }
}

bool SparsityBound::at_least(const Int& x, const Rational& t) const {
    switch (family_) {
        case PhiFamily::log_scaled: {
            Rational y = (t - params_[1]) / params_[0];
            return y <= 0 || log2_at_least(x, y);
        }
        case PhiFamily::power: {
            Rational y = (t - params_[2]) / params_[0];
            return y <= 0 || power_at_least(x, params_[1], y);
        }
        case PhiFamily::affine:
            return params_[0] * Rational(x) + params_[1] >= t;
        case PhiFamily::table: {
            std::size_t points = params_.size() / 2;
            std::size_t i = 0;
            while (i + 1 < points && Rational(x) >= params_[2 * (i + 1)]) ++i;
            Rational value = params_[2 * i + 1];
            if (i + 1 == points) value += params_.back() * (Rational(x) - params_[2 * i]);
            return value >= t;
        }
    }
    return false;
}

double SparsityBound::approx(const Int& x) const {
    auto d = [](const Rational& r) { return r.convert_to<double>(); };
    double xd = x.convert_to<double>();
    switch (family_) {
        case PhiFamily::log_scaled: return d(params_[0]) * std::log2(1.0 + xd) + d(params_[1]);
        case PhiFamily::power: return d(params_[0]) * std::pow(xd, d(params_[1])) + d(params_[2]);
        case PhiFamily::affine: return d(params_[0]) * xd + d(params_[1]);
        case PhiFamily::table: {
            std::size_t points = params_.size() / 2;
            std::size_t i = 0;
            while (i + 1 < points && xd >= d(params_[2 * (i + 1)])) ++i;
            double value = d(params_[2 * i + 1]);
            if (i + 1 == points) value += d(params_.back()) * (xd - d(params_[2 * i]));
            return value;
        }
    }
    return 0.0;
}

std::string SparsityBound::params_text() const {
    std::string out;
    for (std::size_t i = 0; i < params_.size(); ++i) {
        if (i) out += ',';
        out += to_string(params_[i]);
    }
    return out;
}

Int sparsity_threshold(const SparsityBound& phi, std::uint64_t k) {
    const Rational target(2 * Int(k));
    if (phi.at_least(0, target)) return 0;
    Int hi = 1;
    while (!phi.at_least(hi, target)) hi <<= 1;
    // phi(lo) < target <= phi(hi)
    Int lo = hi >> 1;
    while (hi - lo > 1) {
        Int mid = (lo + hi) >> 1;
        if (phi.at_least(mid, target)) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    return hi;
}

}  // namespace repbasis
