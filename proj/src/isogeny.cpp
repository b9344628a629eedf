#include "iwa/isogeny.hpp"

#include <string>
#include <utility>

namespace iwa {

IsogenyData::IsogenyData(PrimeContext ctx, long global_degree, long kernel_exponent,
                         std::vector<ArchPlaceDatum> arch, std::vector<PAdicPlaceDatum> padic,
                         bool assumption)
    : ctx_(std::move(ctx)),
      global_degree_(global_degree),
      kernel_exponent_(kernel_exponent),
      arch_places_(std::move(arch)),
      p_places_(std::move(padic)),
      assumption_(assumption) {}

IsogenyData IsogenyData::make(PrimeContext ctx, long global_degree, long kernel_exponent,
                              std::vector<ArchPlaceDatum> arch_places,
                              std::vector<PAdicPlaceDatum> p_places,
                              bool localization_surjective_asserted) {
    if (global_degree < 1) throw domain_error("isogeny data: global degree must be >= 1");
    if (kernel_exponent < 0) throw domain_error("isogeny data: kernel exponent must be >= 0");
    long arch_degree = 0;
    for (const auto& place : arch_places) {
        if (place.local_points_exponent < 0) {
            throw domain_error("isogeny data: local point exponents must be >= 0");
        }
        if (place.local_points_exponent > kernel_exponent) {
            throw domain_error(
                "isogeny data: local points of the kernel cannot exceed the kernel");
        }
        if (place.kind == ArchKind::complex_place &&
            place.local_points_exponent != kernel_exponent) {
            throw domain_error(
                "isogeny data: at a complex place all kernel points are local; expected "
                "exponent " +
                std::to_string(kernel_exponent));
        }
        arch_degree += place.degree_weight();
    }
    if (arch_degree != global_degree) {
        throw domain_error("isogeny data: archimedean degrees sum to " +
                           std::to_string(arch_degree) + ", expected the global degree " +
                           std::to_string(global_degree));
    }
    long p_degree = 0;
    for (const auto& place : p_places) {
        if (place.local_degree < 1) {
            throw domain_error("isogeny data: local degrees above p must be >= 1");
        }
        if (place.reduced_kernel_exponent < 0) {
            throw domain_error("isogeny data: reduced kernel exponents must be >= 0");
        }
        p_degree += place.local_degree;
    }
    if (p_degree != global_degree) {
        throw domain_error("isogeny data: degrees above p sum to " + std::to_string(p_degree) +
                           ", expected the global degree " + std::to_string(global_degree));
    }
    return IsogenyData(std::move(ctx), global_degree, kernel_exponent, std::move(arch_places),
                       std::move(p_places), localization_surjective_asserted);
}

long tate_global_exponent(const IsogenyData& d) {
    long local_points = 0;
    for (const auto& place : d.arch_places()) local_points += place.local_points_exponent;
    // |p^m|_v = p^{m * d_v} at an archimedean place; the d_v sum to the degree.
    return local_points - d.global_degree() * d.kernel_exponent();
}

long tate_local_exponent(const PAdicPlaceDatum& pd) {
    return -pd.local_degree * pd.reduced_kernel_exponent;
}

long isogeny_mu_delta(const IsogenyData& d) {
    d.ctx().require_at_least(5, "isogeny_mu_delta");
    long arch_sum = 0;
    for (const auto& place : d.arch_places()) arch_sum += place.local_points_exponent;
    long reduced_sum = 0;
    for (const auto& place : d.p_places()) {
        // ord_p |#reduced kernel|_v = -[F_v : Q_p] * exponent, subtracted.
        reduced_sum += place.local_degree * place.reduced_kernel_exponent;
    }
    return arch_sum - d.global_degree() * d.kernel_exponent() + reduced_sum;
}

long mu_over_extension(const IsogenyData& base, long l_degree_factor,
                       const IsogenyData& l_data) {
    if (l_degree_factor < 1) {
        throw domain_error("mu_over_extension: extension degree factor must be >= 1");
    }
    if (l_data.global_degree() != base.global_degree() * l_degree_factor) {
        throw domain_error("mu_over_extension: extension degree " +
                           std::to_string(l_data.global_degree()) + " is not " +
                           std::to_string(l_degree_factor) + " times the base degree " +
                           std::to_string(base.global_degree()));
    }
    return isogeny_mu_delta(l_data);
}

long theorem_k_hmrank(long rank_cyc, long r) { return rank_cyc + r; }

long lambda_growth(long ext_degree, long lambda_cyc, long r, long r_l) {
    return ext_degree * (lambda_cyc + r) - r_l;
}

} // namespace iwa
