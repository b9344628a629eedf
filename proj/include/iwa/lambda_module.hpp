#ifndef IWA_LAMBDA_MODULE_HPP
#define IWA_LAMBDA_MODULE_HPP

#include <optional>

#include "iwa/matrix.hpp"
#include "iwa/poly.hpp"
#include "iwa/prime.hpp"
#include "iwa/weierstrass.hpp"
#include "iwa/zp_shape.hpp"

namespace iwa {

class OmegaModule;

// Shapes of the degree-0 and degree-1 homology of a one-dimensional group
// acting on a module; higher degrees vanish.
struct HomologyProfile {
    ZpModuleShape h0;
    ZpModuleShape h1;

    bool operator==(const HomologyProfile& rhs) const { return h0 == rhs.h0 && h1 == rhs.h1; }
};

/*
 * Finitely presented module over the one-variable Iwasawa algebra, given as
 * the cokernel of a relation matrix A : Lambda^a -> Lambda^b.  Relations are
 * the COLUMNS of A; a = 0 presents the free module of rank b.
 */
class LambdaModule {
public:
    static LambdaModule make(PrimeContext ctx, long generators, Mat<IwasawaElement> relations);

    const PrimeContext& ctx() const { return ctx_; }
    long generators() const { return gens_; }                            // b
    long relation_count() const { return static_cast<long>(rel_.cols()); }  // a
    const Mat<IwasawaElement>& relations() const { return rel_; }

    // Relation matrix evaluated at T = 0, the map on coinvariants.
    Mat<mpz_class> relations_at_zero() const;

private:
    LambdaModule(PrimeContext ctx, long gens, Mat<IwasawaElement> rel);

    PrimeContext ctx_;
    long gens_;
    Mat<IwasawaElement> rel_;
};

// b - rank of the relation matrix over Q(T); zero exactly for torsion modules.
long lambda_rank(const LambdaModule& m);

// True when the relation matrix is injective, i.e. the presentation extends
// to a length-one free resolution 0 -> Lambda^a -> Lambda^b -> M -> 0.
bool has_short_resolution(const LambdaModule& m);

// H_0 = coker A(0), H_1 = ker A(0) over Z_p; kernels of integer matrices are
// p-locally torsion free, so H_1 is reported free.
HomologyProfile homology(const LambdaModule& m);

// Alternating sum of homology free ranks.  Equals lambda_rank by a theorem;
// the two sides share no code beyond the matrix container.
long euler_rank(const LambdaModule& m);

// ord_p of the alternating product of homology orders when both groups are
// finite; empty when either is infinite.
std::optional<long> euler_char_order_exponent(const LambdaModule& m);

// mu / lambda of a torsion module from the content and Weierstrass degree of
// det(A); needs a square presentation with nonzero determinant.
WeierstrassData char_invariants(const LambdaModule& m);

// The same module viewed over the index-p^k subgroup algebra, with subgroup
// variable S = (1+T)^{p^k} - 1.  Generators multiply by p^k.
LambdaModule restrict_to_subgroup(const LambdaModule& m, long k);

LambdaModule direct_sum(const LambdaModule& m, const LambdaModule& n);

// Relations reduced coefficientwise mod p, as a module over Omega = Lambda/p.
OmegaModule mod_p_reduction(const LambdaModule& m);

// Omega-rank of M[p], computed as a - rank of the relation matrix mod p.
long p_torsion_rank(const LambdaModule& m);

} // namespace iwa

#endif // IWA_LAMBDA_MODULE_HPP
