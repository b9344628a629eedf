#include "iwa/omega_module.hpp"

#include <string>
#include <utility>

#include "iwa/rank.hpp"

namespace iwa {

OmegaModule::OmegaModule(PrimeContext ctx, long gens, Mat<FpPoly> rel)
    : ctx_(std::move(ctx)), gens_(gens), rel_(std::move(rel)) {}

OmegaModule OmegaModule::make(PrimeContext ctx, long generators, Mat<FpPoly> relations) {
    if (generators < 0) throw format_error("module: negative generator count");
    if (static_cast<long>(relations.rows()) != generators) {
        throw format_error("module: relation matrix has " + std::to_string(relations.rows()) +
                           " rows, expected one per generator (" + std::to_string(generators) +
                           ")");
    }
    for (std::size_t i = 0; i < relations.rows(); ++i) {
        for (std::size_t j = 0; j < relations.cols(); ++j) {
            relations.at(i, j) = fp_reduce(relations.at(i, j).c, ctx);
        }
    }
    return OmegaModule(std::move(ctx), generators, std::move(relations));
}

Mat<mpz_class> OmegaModule::relations_at_zero() const {
    Mat<mpz_class> out(rel_.rows(), rel_.cols());
    for (std::size_t i = 0; i < rel_.rows(); ++i) {
        for (std::size_t j = 0; j < rel_.cols(); ++j) out.at(i, j) = rel_.at(i, j).coeff(0);
    }
    return out;
}

long omega_rank(const OmegaModule& n) {
    return n.generators() - fp_matrix_rank(n.relations(), n.ctx());
}

long omega_euler_rank(const OmegaModule& n) {
    if (fp_matrix_rank(n.relations(), n.ctx()) != n.relation_count()) {
        throw unsupported_presentation_error(
            "omega_euler_rank: relation matrix is not injective over F_p(T); "
            "re-present the module with independent relation columns");
    }
    long rank0 = fp_scalar_rank(n.relations_at_zero(), n.ctx());
    long h0 = n.generators() - rank0;
    long h1 = n.relation_count() - rank0;
    return h0 - h1;
}

long cyclic_annihilated_rank(const FpPoly& g, const PrimeContext& ctx) {
    FpPoly reduced = fp_reduce(g.c, ctx);
    if (reduced.is_zero()) {
        throw domain_error(
            "cyclic_annihilated_rank: zero annihilator presents the free module of rank 1");
    }
    Mat<FpPoly> rel(1, 1);
    rel.at(0, 0) = std::move(reduced);
    return omega_rank(OmegaModule::make(ctx, 1, std::move(rel)));
}

} // namespace iwa
