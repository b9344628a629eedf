#ifndef IWA_ELEMENTARY_HPP
#define IWA_ELEMENTARY_HPP

#include <vector>

#include "iwa/lambda_module.hpp"
#include "iwa/poly.hpp"
#include "iwa/prime.hpp"

namespace iwa {

// One summand Lambda/(f^multiplicity) with f distinguished: monic of degree
// >= 1 with every lower coefficient divisible by p.
struct DistinguishedPart {
    IwasawaElement poly;
    long multiplicity = 1;
};

/*
 * Structure-theorem normal form of a finitely generated Lambda-module:
 *   Lambda^r  (+)  Lambda/p^{m_i}  (+)  Lambda/(f_j^{k_j}).
 * Invariants of these modules have closed forms, which serve as the
 * independent oracle for the presentation-based computations.
 */
class ElementaryModule {
public:
    static ElementaryModule make(PrimeContext ctx, long free_rank,
                                 std::vector<long> p_power_exponents,
                                 std::vector<DistinguishedPart> distinguished_parts);

    const PrimeContext& ctx() const { return ctx_; }
    long free_rank() const { return free_rank_; }
    const std::vector<long>& p_power_exponents() const { return p_exps_; }
    const std::vector<DistinguishedPart>& distinguished_parts() const { return dist_; }
    bool is_torsion() const { return free_rank_ == 0; }
    bool is_p_torsion() const { return free_rank_ == 0 && dist_.empty(); }

private:
    ElementaryModule(PrimeContext ctx, long free_rank, std::vector<long> p_exps,
                     std::vector<DistinguishedPart> dist);

    PrimeContext ctx_;
    long free_rank_;
    std::vector<long> p_exps_;           // sorted descending
    std::vector<DistinguishedPart> dist_;
};

struct ElementaryInvariants {
    long rank = 0;
    long mu = 0;
    long lambda = 0;
    HomologyProfile homology;
};

// All four invariants in closed form, no matrix elimination.  mu is evaluated
// as the literal sum of ranks of the graded pieces p^i M(p) / p^{i+1}.
ElementaryInvariants elementary_invariants(const ElementaryModule& e);

// Diagonal presentation of the normal form: one relation column per torsion
// summand, free summands contribute relation-free generators.  Square exactly
// when the module is torsion.
LambdaModule to_presentation(const ElementaryModule& e);

} // namespace iwa

#endif // IWA_ELEMENTARY_HPP
