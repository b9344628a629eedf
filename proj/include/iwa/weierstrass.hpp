#ifndef IWA_WEIERSTRASS_HPP
#define IWA_WEIERSTRASS_HPP

#include <optional>

#include "iwa/poly.hpp"
#include "iwa/prime.hpp"

namespace iwa {

// mu / lambda data of a nonzero element of Z_p[[T]]: f = p^mu * u * g with u a
// unit and g distinguished of degree lambda.
struct WeierstrassData {
    long mu = 0;
    long lambda = 0;
    bool is_unit = false;

    bool operator==(const WeierstrassData& rhs) const {
        return mu == rhs.mu && lambda == rhs.lambda && is_unit == rhs.is_unit;
    }
    bool operator!=(const WeierstrassData& rhs) const { return !(*this == rhs); }
};

// Minimum p-valuation over the coefficients; empty for the zero element
// (valuation +infinity).
std::optional<long> content_valuation(const IwasawaElement& f, const PrimeContext& ctx);

// mu = content valuation; lambda = Newton-polygon reading of the Weierstrass
// degree: the first coefficient index at which the content valuation is
// attained.
WeierstrassData weierstrass_prepare(const IwasawaElement& f, const PrimeContext& ctx);

} // namespace iwa

#endif // IWA_WEIERSTRASS_HPP
