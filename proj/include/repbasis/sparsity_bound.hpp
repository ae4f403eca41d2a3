#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "repbasis/integer.hpp"

namespace repbasis {

enum class PhiFamily {
    log_scaled,  ///< a*log2(1+x) + b            params: a[,b]
    power,       ///< a*x^e + b                  params: a,e[,b]
    affine,      ///< slope*x + intercept         params: slope,intercept
    table,       ///< step function, then linear  params: x1,v1,...,xm,vm,slope
};

std::string_view to_string(PhiFamily family);
PhiFamily parse_phi_family(std::string_view name);

/// Monotone nondecreasing, unbounded sparsity bound phi on x >= 0.
///
/// All queries are exact: phi(x) >= t is decided in rational / integer
/// arithmetic, so thresholds never depend on floating point rounding.
class SparsityBound {
public:
    /// Validates the parameters so that phi >= 0, phi is nondecreasing and phi -> inf.
    /// Throws std::invalid_argument otherwise.
    SparsityBound(PhiFamily family, std::vector<Rational> params);

    static SparsityBound identity() { return {PhiFamily::affine, {Rational(1), Rational(0)}}; }

    /// phi(x) >= t, for x >= 0.
    bool at_least(const Int& x, const Rational& t) const;

    /// Floating point value of phi(x), for display only.
    double approx(const Int& x) const;

    PhiFamily family() const { return family_; }
    const std::vector<Rational>& params() const { return params_; }

    /// Comma-separated parameter list as accepted by the config parser.
    std::string params_text() const;

    friend bool operator==(const SparsityBound&, const SparsityBound&) = default;

private:
    PhiFamily family_;
    std::vector<Rational> params_;
};

/// w_k: the least integer x >= 0 with phi(x) >= 2k.
Int sparsity_threshold(const SparsityBound& phi, std::uint64_t k);

}  // namespace repbasis
