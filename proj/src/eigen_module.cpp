#include "iwa/eigen_module.hpp"

#include <string>
#include <utility>

namespace iwa {

GDescriptor GDescriptor::make(PrimeContext ctx, long action_exponent) {
    GDescriptor g{std::move(ctx), action_exponent};
    if (action_exponent < 0 || action_exponent > g.character_count() - 1) {
        throw domain_error("group descriptor: action exponent must lie in [0, p-2]");
    }
    return g;
}

long GDescriptor::character_count() const {
    mpz_class n = ctx.p() - 1;
    if (!n.fits_slong_p()) throw domain_error("group descriptor: prime too large");
    return n.get_si();
}

EigenModule::EigenModule(GDescriptor g, std::map<long, LambdaModule> components)
    : g_(std::move(g)), components_(std::move(components)) {}

EigenModule EigenModule::make(GDescriptor g, std::map<long, LambdaModule> components) {
    const long chars = g.character_count();
    for (const auto& [index, module] : components) {
        if (index < 0 || index >= chars) {
            throw domain_error("eigen module: character index " + std::to_string(index) +
                               " out of range [0, " + std::to_string(chars - 1) + "]");
        }
        if (module.ctx() != g.ctx) {
            throw domain_error("eigen module: component prime differs from group prime");
        }
    }
    return EigenModule(std::move(g), std::move(components));
}

const LambdaModule* EigenModule::component(long index) const {
    auto it = components_.find(index);
    return it == components_.end() ? nullptr : &it->second;
}

HomologyProfile g_homology(const EigenModule& m) {
    HomologyProfile out;
    if (const LambdaModule* trivial_part = m.component(0)) {
        out.h0 = homology(*trivial_part).h0;
    }
    if (const LambdaModule* action_part = m.component(m.descriptor().action_exponent)) {
        out.h1 = homology(*action_part).h1;
    }
    return out;
}

long hmrank(const EigenModule& m) {
    HomologyProfile h = g_homology(m);
    return h.h0.free_rank - h.h1.free_rank;
}

long gamma_rank(const EigenModule& m) {
    long total = 0;
    for (const auto& [index, module] : m.components()) total += lambda_rank(module);
    return total;
}

EigenModule twist(const EigenModule& m, long j) {
    if (!m.descriptor().is_direct_product()) {
        throw unsupported_group_error("twist: defined only for direct-product descriptors");
    }
    const long chars = m.descriptor().character_count();
    std::map<long, LambdaModule> shifted;
    for (const auto& [index, module] : m.components()) {
        long target = ((index + j) % chars + chars) % chars;
        shifted.emplace(target, module);
    }
    return EigenModule::make(m.descriptor(), std::move(shifted));
}

EigenModule induce(const LambdaModule& n, const GDescriptor& g) {
    if (n.ctx() != g.ctx) {
        throw domain_error("induce: module prime differs from group prime");
    }
    std::map<long, LambdaModule> components;
    for (long j = 0; j < g.character_count(); ++j) components.emplace(j, n);
    return EigenModule::make(g, std::move(components));
}

EigenModule direct_sum(const EigenModule& m, const EigenModule& n) {
    if (!(m.descriptor() == n.descriptor())) {
        throw domain_error("direct_sum: eigen modules over different group descriptors");
    }
    std::map<long, LambdaModule> combined = m.components();
    for (const auto& [index, module] : n.components()) {
        auto it = combined.find(index);
        if (it == combined.end()) {
            combined.emplace(index, module);
        } else {
            it->second = direct_sum(it->second, module);
        }
    }
    return EigenModule::make(m.descriptor(), std::move(combined));
}

} // namespace iwa
