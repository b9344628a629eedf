#ifndef IWA_EIGEN_MODULE_HPP
#define IWA_EIGEN_MODULE_HPP

#include <map>

#include "iwa/lambda_module.hpp"
#include "iwa/prime.hpp"

namespace iwa {

/*
 * Group of shape Gamma x Delta or Gamma semidirect Delta with Delta the prime
 * residues mod p.  Delta acts on Gamma through the e-th power of a fixed
 * generator character; e = 0 is the direct product.
 */
struct GDescriptor {
    PrimeContext ctx;
    long action_exponent = 0;

    static GDescriptor make(PrimeContext ctx, long action_exponent);
    long character_count() const;  // p - 1
    bool is_direct_product() const { return action_exponent == 0; }

    bool operator==(const GDescriptor& rhs) const {
        return ctx == rhs.ctx && action_exponent == rhs.action_exponent;
    }
};

/*
 * Module over the two-step group, stored through its character eigenspace
 * decomposition: one Lambda-module per character index j (the j-th power of
 * the generator character).  Absent indices are the zero module.
 */
class EigenModule {
public:
    static EigenModule make(GDescriptor g, std::map<long, LambdaModule> components);

    const GDescriptor& descriptor() const { return g_; }
    const std::map<long, LambdaModule>& components() const { return components_; }
    // nullptr for the zero component.
    const LambdaModule* component(long index) const;

private:
    EigenModule(GDescriptor g, std::map<long, LambdaModule> components);

    GDescriptor g_;
    std::map<long, LambdaModule> components_;
};

/*
 * Homology over the full group from the eigenspace pieces: coinvariants under
 * Delta keep the trivial isotypic part, and Delta acts on H_0 of the chi
 * eigenspace by chi but on H_1 by chi twisted back through the action
 * character.  So H_0 comes from index 0 and H_1 from index e.
 */
HomologyProfile g_homology(const EigenModule& m);

// Alternating sum of homology free ranks over the full group.  May be
// negative for semidirect products.
long hmrank(const EigenModule& m);

// Sum of the Lambda-ranks of the eigenspaces: the rank over the pro-p part.
long gamma_rank(const EigenModule& m);

// Tensor by the j-th power character: shifts component indices by j.  Only
// meaningful for direct products.
EigenModule twist(const EigenModule& m, long j);

// The module induced from the pro-p subgroup: a copy of N in every eigenspace.
EigenModule induce(const LambdaModule& n, const GDescriptor& g);

// Componentwise direct sum (same descriptor required).
EigenModule direct_sum(const EigenModule& m, const EigenModule& n);

} // namespace iwa

#endif // IWA_EIGEN_MODULE_HPP
