#include "iwa/weierstrass.hpp"

namespace iwa {

std::optional<long> content_valuation(const IwasawaElement& f, const PrimeContext& ctx) {
    if (f.is_zero()) return std::nullopt;
    std::optional<long> best;
    for (const auto& c : f.coefficients()) {
        if (c == 0) continue;
        long v = valp(c, ctx);
        if (!best || v < *best) best = v;
        if (*best == 0) break;
    }
    return best;
}

WeierstrassData weierstrass_prepare(const IwasawaElement& f, const PrimeContext& ctx) {
    if (f.is_zero()) {
        throw domain_error("weierstrass_prepare: undefined for the zero element");
    }
    long mu = *content_valuation(f, ctx);
    long lambda = 0;
    const auto& coeffs = f.coefficients();
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (coeffs[i] != 0 && valp(coeffs[i], ctx) == mu) {
            lambda = static_cast<long>(i);
            break;
        }
    }
    return WeierstrassData{mu, lambda, mu == 0 && lambda == 0};
}

} // namespace iwa
