#include "iwa/elementary.hpp"

#include <algorithm>
#include <functional>
#include <utility>

namespace iwa {

namespace {

bool is_distinguished(const IwasawaElement& f, const PrimeContext& ctx) {
    if (f.degree() < 1) return false;
    if (f.coeff(static_cast<std::size_t>(f.degree())) != 1) return false;
    for (long i = 0; i < f.degree(); ++i) {
        if (f.coeff(static_cast<std::size_t>(i)) % ctx.p() != 0) return false;
    }
    return true;
}

IwasawaElement poly_pow(const IwasawaElement& f, long k) {
    IwasawaElement out(1);
    for (long i = 0; i < k; ++i) out = out * f;
    return out;
}

} // namespace

ElementaryModule::ElementaryModule(PrimeContext ctx, long free_rank, std::vector<long> p_exps,
                                   std::vector<DistinguishedPart> dist)
    : ctx_(std::move(ctx)),
      free_rank_(free_rank),
      p_exps_(std::move(p_exps)),
      dist_(std::move(dist)) {}

ElementaryModule ElementaryModule::make(PrimeContext ctx, long free_rank,
                                        std::vector<long> p_power_exponents,
                                        std::vector<DistinguishedPart> distinguished_parts) {
    if (free_rank < 0) throw domain_error("elementary module: negative free rank");
    for (long m : p_power_exponents) {
        if (m < 1) throw domain_error("elementary module: p-power exponents must be >= 1");
    }
    for (const auto& part : distinguished_parts) {
        if (part.multiplicity < 1) {
            throw domain_error("elementary module: multiplicities must be >= 1");
        }
        if (!is_distinguished(part.poly, ctx)) {
            throw domain_error("elementary module: " + part.poly.str() +
                               " is not distinguished (monic, degree >= 1, lower coefficients "
                               "divisible by p)");
        }
    }
    std::sort(p_power_exponents.begin(), p_power_exponents.end(), std::greater<long>());
    return ElementaryModule(std::move(ctx), free_rank, std::move(p_power_exponents),
                            std::move(distinguished_parts));
}

ElementaryInvariants elementary_invariants(const ElementaryModule& e) {
    ElementaryInvariants out;
    out.rank = e.free_rank();

    // The p-power torsion submodule is the sum of the Lambda/p^m parts; the
    // graded piece p^i M(p) / p^{i+1} is free over Omega of rank #{m > i}.
    for (long i = 0;; ++i) {
        long graded_rank = static_cast<long>(
            std::count_if(e.p_power_exponents().begin(), e.p_power_exponents().end(),
                          [i](long m) { return m > i; }));
        if (graded_rank == 0) break;
        out.mu += graded_rank;
    }

    for (const auto& part : e.distinguished_parts()) {
        out.lambda += part.multiplicity * (part.poly.degree());
    }

    ZpModuleShape h0 = ZpModuleShape::free(e.free_rank());
    ZpModuleShape h1;
    for (long m : e.p_power_exponents()) {
        h0 = h0 + ZpModuleShape::make(0, {m});
    }
    for (const auto& part : e.distinguished_parts()) {
        mpz_class at_zero = part.poly.constant_term();
        if (at_zero == 0) {
            // T divides f: the summand has infinite coinvariants and invariants.
            h0 = h0 + ZpModuleShape::free(1);
            h1 = h1 + ZpModuleShape::free(1);
        } else {
            h0 = h0 + ZpModuleShape::make(0, {part.multiplicity * valp(at_zero, e.ctx())});
        }
    }
    out.homology = HomologyProfile{std::move(h0), std::move(h1)};
    return out;
}

LambdaModule to_presentation(const ElementaryModule& e) {
    const long torsion = static_cast<long>(e.p_power_exponents().size()) +
                         static_cast<long>(e.distinguished_parts().size());
    const long gens = e.free_rank() + torsion;
    Mat<IwasawaElement> rel(static_cast<std::size_t>(gens), static_cast<std::size_t>(torsion));
    long row = e.free_rank();  // free generators first, relation-free
    long col = 0;
    for (long m : e.p_power_exponents()) {
        mpz_class pm;
        mpz_pow_ui(pm.get_mpz_t(), e.ctx().p().get_mpz_t(), static_cast<unsigned long>(m));
        rel.at(static_cast<std::size_t>(row++), static_cast<std::size_t>(col++)) =
            IwasawaElement(pm);
    }
    for (const auto& part : e.distinguished_parts()) {
        rel.at(static_cast<std::size_t>(row++), static_cast<std::size_t>(col++)) =
            poly_pow(part.poly, part.multiplicity);
    }
    return LambdaModule::make(e.ctx(), gens, std::move(rel));
}

} // namespace iwa
