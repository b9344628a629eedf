#ifndef IWA_OMEGA_MODULE_HPP
#define IWA_OMEGA_MODULE_HPP

#include "iwa/matrix.hpp"
#include "iwa/poly.hpp"
#include "iwa/prime.hpp"

namespace iwa {

// Finitely presented module over Omega = Lambda/p, the mod-p Iwasawa algebra.
// Same cokernel convention as LambdaModule; entries live in F_p[T].
class OmegaModule {
public:
    static OmegaModule make(PrimeContext ctx, long generators, Mat<FpPoly> relations);

    const PrimeContext& ctx() const { return ctx_; }
    long generators() const { return gens_; }
    long relation_count() const { return static_cast<long>(rel_.cols()); }
    const Mat<FpPoly>& relations() const { return rel_; }

    // Relation matrix at T = 0 as scalars mod p.
    Mat<mpz_class> relations_at_zero() const;

private:
    OmegaModule(PrimeContext ctx, long gens, Mat<FpPoly> rel);

    PrimeContext ctx_;
    long gens_;
    Mat<FpPoly> rel_;
};

// b - rank of the relations over F_p(T).
long omega_rank(const OmegaModule& n);

// dim H_0 - dim H_1 over F_p, read off the T = 0 specialization of an
// injective presentation.  Agrees with omega_rank; distinct computation path.
long omega_euler_rank(const OmegaModule& n);

// Rank of the cyclic module Omega/(g) for nonzero g: always zero, a pinned
// executable fact about cyclic modules with nontrivial annihilator.
long cyclic_annihilated_rank(const FpPoly& g, const PrimeContext& ctx);

} // namespace iwa

#endif // IWA_OMEGA_MODULE_HPP
