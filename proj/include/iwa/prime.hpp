#ifndef IWA_PRIME_HPP
#define IWA_PRIME_HPP

#include <gmpxx.h>

#include "iwa/errors.hpp"

namespace iwa {

// The odd prime every computation is local to.
class PrimeContext {
public:
    explicit PrimeContext(mpz_class p);
    explicit PrimeContext(long p) : PrimeContext(mpz_class(p)) {}

    const mpz_class& p() const { return p_; }

    // Enforced where a formula carries the stronger standing hypothesis.
    void require_at_least(long bound, const char* what) const;

    bool operator==(const PrimeContext& other) const { return p_ == other.p_; }
    bool operator!=(const PrimeContext& other) const { return p_ != other.p_; }

private:
    mpz_class p_;
};

// Largest k with p^k | n.  Zero input has no finite valuation.
long valp(const mpz_class& n, const PrimeContext& ctx);

} // namespace iwa

#endif // IWA_PRIME_HPP
