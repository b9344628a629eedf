#include "iwa/prime.hpp"

#include <string>

namespace iwa {

PrimeContext::PrimeContext(mpz_class p) : p_(std::move(p)) {
    if (p_ < 3) {
        throw domain_error("prime context requires an odd prime p >= 3, got " + p_.get_str());
    }
    if (mpz_probab_prime_p(p_.get_mpz_t(), 40) == 0) {
        throw domain_error("prime context requires a prime, got composite " + p_.get_str());
    }
}

void PrimeContext::require_at_least(long bound, const char* what) const {
    if (p_ < bound) {
        throw hypothesis_error(std::string(what) + " requires p >= " + std::to_string(bound) +
                               ", got p = " + p_.get_str());
    }
}

long valp(const mpz_class& n, const PrimeContext& ctx) {
    if (n == 0) {
        throw domain_error("valp: zero has no finite p-adic valuation");
    }
    mpz_class reduced;
    return static_cast<long>(
        mpz_remove(reduced.get_mpz_t(), n.get_mpz_t(), ctx.p().get_mpz_t()));
}

} // namespace iwa
