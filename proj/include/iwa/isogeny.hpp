#ifndef IWA_ISOGENY_HPP
#define IWA_ISOGENY_HPP

#include <vector>

#include "iwa/prime.hpp"

namespace iwa {

enum class ArchKind { real, complex_place };

// Archimedean place together with ord_p of the number of local points of the
// isogeny kernel.  At complex places every kernel point is local, so the
// exponent equals the full kernel exponent.
struct ArchPlaceDatum {
    ArchKind kind = ArchKind::complex_place;
    long local_points_exponent = 0;

    long degree_weight() const { return kind == ArchKind::real ? 1 : 2; }
};

// Place above p: local degree over Q_p and ord_p of the order of the reduced
// kernel there.
struct PAdicPlaceDatum {
    long local_degree = 1;
    long reduced_kernel_exponent = 0;
};

/*
 * Per-place arithmetic data for the isogeny mu-variation formulas over a
 * number field of the given degree.  Place degrees must cover the global
 * degree on both the archimedean and the p-adic side.  The surjectivity of
 * the localization maps is not checkable from this data; it is asserted by
 * the caller and echoed in reports.
 */
class IsogenyData {
public:
    static IsogenyData make(PrimeContext ctx, long global_degree, long kernel_exponent,
                            std::vector<ArchPlaceDatum> arch_places,
                            std::vector<PAdicPlaceDatum> p_places,
                            bool localization_surjective_asserted = true);

    const PrimeContext& ctx() const { return ctx_; }
    long global_degree() const { return global_degree_; }
    long kernel_exponent() const { return kernel_exponent_; }
    const std::vector<ArchPlaceDatum>& arch_places() const { return arch_places_; }
    const std::vector<PAdicPlaceDatum>& p_places() const { return p_places_; }
    bool localization_surjective_asserted() const { return assumption_; }

private:
    IsogenyData(PrimeContext ctx, long global_degree, long kernel_exponent,
                std::vector<ArchPlaceDatum> arch, std::vector<PAdicPlaceDatum> padic,
                bool assumption);

    PrimeContext ctx_;
    long global_degree_;
    long kernel_exponent_;
    std::vector<ArchPlaceDatum> arch_places_;
    std::vector<PAdicPlaceDatum> p_places_;
    bool assumption_;
};

// ord_p of the global Euler characteristic of the kernel: archimedean local
// point exponents minus degree times the kernel exponent.
long tate_global_exponent(const IsogenyData& d);

// ord_p of the local Euler characteristic at a place above p:
// -[F_v : Q_p] * ord_p(#reduced kernel).
long tate_local_exponent(const PAdicPlaceDatum& pd);

// Difference of mu-invariants across the isogeny, as a single closed formula
// over the place data.  Requires p >= 5.
long isogeny_mu_delta(const IsogenyData& d);

// The same variation computed over an extension L of the base field; the
// degree of L must be the stated multiple of the base degree.
long mu_over_extension(const IsogenyData& base, long l_degree_factor, const IsogenyData& l_data);

// Homological rank over the cyclotomic-level subgroup: Z_p-rank of the
// cyclotomic Selmer dual plus the number of split multiplicative primes.
long theorem_k_hmrank(long rank_cyc, long r);

// lambda growth in a finite extension of the cyclotomic level:
// degree * (lambda_cyc + r) - r_L.
long lambda_growth(long ext_degree, long lambda_cyc, long r, long r_l);

} // namespace iwa

#endif // IWA_ISOGENY_HPP
