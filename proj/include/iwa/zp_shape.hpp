#ifndef IWA_ZP_SHAPE_HPP
#define IWA_ZP_SHAPE_HPP

#include <gmpxx.h>

#include <string>
#include <vector>

#include "iwa/matrix.hpp"
#include "iwa/prime.hpp"

namespace iwa {

// Isomorphism type of a finitely generated Z_p-module: a free part plus
// cyclic p-power torsion factors.  Exponents are kept sorted descending.
struct ZpModuleShape {
    long free_rank = 0;
    std::vector<long> torsion_exponents;

    bool is_finite() const { return free_rank == 0; }
    bool is_trivial() const { return free_rank == 0 && torsion_exponents.empty(); }
    long torsion_length() const;  // sum of exponents = ord_p of the torsion order

    static ZpModuleShape free(long rank) { return ZpModuleShape{rank, {}}; }
    static ZpModuleShape make(long free_rank, std::vector<long> exponents);

    ZpModuleShape operator+(const ZpModuleShape& rhs) const;  // direct sum
    bool operator==(const ZpModuleShape& rhs) const {
        return free_rank == rhs.free_rank && torsion_exponents == rhs.torsion_exponents;
    }
    bool operator!=(const ZpModuleShape& rhs) const { return !(*this == rhs); }

    std::string str() const;
};

/*
 * Diagonalize an integer matrix over the local ring at p: the pivot of least
 * p-valuation divides every remaining entry there, so one unit-scaled pass
 * clears its row and column exactly.  Returns the valuations of the nonzero
 * diagonal entries (unit divisors contribute 0); their count is the rank of
 * the matrix over Q.  Entry growth stays polynomial, unlike gcd pivoting.
 */
std::vector<long> p_local_divisor_valuations(Mat<mpz_class> b, const PrimeContext& ctx);

// Shape of coker(B : Z_p^cols -> Z_p^rows): unit elementary divisors vanish,
// the rest contribute their p-valuation.
ZpModuleShape snf_p_local(const Mat<mpz_class>& b, const PrimeContext& ctx);

} // namespace iwa

#endif // IWA_ZP_SHAPE_HPP
