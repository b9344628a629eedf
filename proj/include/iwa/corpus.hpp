#ifndef IWA_CORPUS_HPP
#define IWA_CORPUS_HPP

#include <cstdint>
#include <random>

#include "iwa/eigen_module.hpp"
#include "iwa/elementary.hpp"
#include "iwa/isogeny.hpp"
#include "iwa/lambda_module.hpp"

namespace iwa {

// Seeded generator with reduction done by hand so streams are identical on
// every toolchain (std distributions are implementation-defined).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next() { return eng_(); }
    // Uniform-ish draw from [lo, hi]; modulo bias is irrelevant at these sizes.
    long range(long lo, long hi);
    bool chance(long numerator, long denominator) { return range(1, denominator) <= numerator; }

private:
    std::mt19937_64 eng_;
};

struct CorpusOptions {
    long max_generators = 6;
    long max_entry_degree = 8;
    long seed_degree = 3;        // degree cap for the diagonal seeds
    long coeff_bound_exp = 6;    // seed coefficients drawn from [-p^e, p^e]
    long max_transforms = 10;    // unimodular row/column operations applied
    bool square = false;         // force a square presentation
    bool nonzero_diagonal_constant = false;  // bias toward finite coinvariants
};

IwasawaElement random_iwasawa_element(Rng& rng, const PrimeContext& ctx, long max_degree,
                                      long coeff_bound_exp, bool nonzero);

/*
 * Random presentation with injective relation matrix: a diagonal of nonzero
 * seeds padded with free rows, scrambled by unimodular row and column
 * operations.  Injectivity is a post-condition and is asserted per instance.
 */
LambdaModule random_injective_module(Rng& rng, const PrimeContext& ctx,
                                     const CorpusOptions& opts = {});

// Square presentation with nonzero determinant (a torsion module).
LambdaModule random_square_torsion_module(Rng& rng, const PrimeContext& ctx,
                                          const CorpusOptions& opts = {});

ElementaryModule random_elementary_module(Rng& rng, const PrimeContext& ctx, bool torsion_only,
                                          bool p_torsion_only = false);

// All components injective; component count and shapes randomized.
EigenModule random_eigen_module(Rng& rng, const GDescriptor& g, const CorpusOptions& opts = {});

IsogenyData random_isogeny_data(Rng& rng, const PrimeContext& ctx);

} // namespace iwa

#endif // IWA_CORPUS_HPP
