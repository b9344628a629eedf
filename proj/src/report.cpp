#include "iwa/report.hpp"

#include <json.hpp>

#include <sstream>

namespace iwa {

namespace {

using json = nlohmann::ordered_json;

void report_lambda(std::ostream& out, const LambdaModule& m) {
    out << "p: " << m.ctx().p().get_str() << "\n";
    out << "generators: " << m.generators() << "\n";
    out << "relations: " << m.relation_count() << "\n";
    out << "lambda_rank: " << lambda_rank(m) << "\n";
    bool short_res = has_short_resolution(m);
    out << "short_resolution: " << (short_res ? "yes" : "no") << "\n";
    if (short_res) {
        HomologyProfile h = homology(m);
        out << "h0: " << h.h0.str() << "\n";
        out << "h1: " << h.h1.str() << "\n";
        out << "euler_rank: " << euler_rank(m) << "\n";
        auto exponent = euler_char_order_exponent(m);
        if (exponent) {
            out << "chi_order_exponent: " << *exponent << "\n";
        } else {
            out << "chi_order_exponent: infinite (homology has positive rank)\n";
        }
        out << "p_torsion_rank: " << p_torsion_rank(m) << "\n";
    } else {
        out << "note: homology unavailable; re-present the module with an injective "
               "relation matrix (independent columns)\n";
    }
    if (m.relation_count() == m.generators()) {
        try {
            WeierstrassData w = char_invariants(m);
            out << "mu: " << w.mu << "\n";
            out << "lambda_invariant: " << w.lambda << "\n";
        } catch (const not_torsion_error&) {
            out << "note: determinant vanishes (module not torsion); mu/lambda undefined\n";
        }
    } else {
        out << "note: mu/lambda need a square presentation; re-present with as many "
               "relations as generators\n";
    }
}

void report_omega(std::ostream& out, const OmegaModule& n) {
    out << "p: " << n.ctx().p().get_str() << "\n";
    out << "generators: " << n.generators() << "\n";
    out << "relations: " << n.relation_count() << "\n";
    out << "omega_rank: " << omega_rank(n) << "\n";
    try {
        out << "omega_euler_rank: " << omega_euler_rank(n) << "\n";
    } catch (const unsupported_presentation_error&) {
        out << "note: euler form unavailable; re-present the module with an injective "
               "relation matrix\n";
    }
}

void report_eigen(std::ostream& out, const EigenModule& m) {
    out << "p: " << m.descriptor().ctx.p().get_str() << "\n";
    out << "action_exponent: " << m.descriptor().action_exponent << "\n";
    out << "components: " << m.components().size() << "\n";
    for (const auto& [index, module] : m.components()) {
        out << "component[" << index << "].lambda_rank: " << lambda_rank(module) << "\n";
    }
    out << "gamma_rank: " << gamma_rank(m) << "\n";
    HomologyProfile h = g_homology(m);
    out << "h0: " << h.h0.str() << "\n";
    out << "h1: " << h.h1.str() << "\n";
    out << "hmrank: " << hmrank(m) << "\n";
}

void report_elementary(std::ostream& out, const ElementaryModule& e) {
    out << "p: " << e.ctx().p().get_str() << "\n";
    ElementaryInvariants inv = elementary_invariants(e);
    out << "rank: " << inv.rank << "\n";
    out << "mu: " << inv.mu << "\n";
    out << "lambda_invariant: " << inv.lambda << "\n";
    out << "h0: " << inv.homology.h0.str() << "\n";
    out << "h1: " << inv.homology.h1.str() << "\n";
}

void report_isogeny(std::ostream& out, const IsogenyData& d) {
    out << "p: " << d.ctx().p().get_str() << "\n";
    out << "global_degree: " << d.global_degree() << "\n";
    out << "kernel_exponent: " << d.kernel_exponent() << "\n";
    out << "tate_global_exponent: " << tate_global_exponent(d) << "\n";
    long locals = 0;
    for (const auto& place : d.p_places()) locals += tate_local_exponent(place);
    out << "tate_local_exponent_sum: " << locals << "\n";
    out << "delta_mu: " << isogeny_mu_delta(d) << "\n";
    out << "assumption_l: "
        << (d.localization_surjective_asserted() ? "asserted by caller" : "not asserted")
        << "\n";
}

} // namespace

std::string invariants_report(const ModuleDocument& doc) {
    std::ostringstream out;
    out << "kind: " << kind_name(doc.kind) << "\n";
    switch (doc.kind) {
        case ModuleDocument::Kind::lambda: report_lambda(out, doc.as_lambda()); break;
        case ModuleDocument::Kind::omega: report_omega(out, doc.as_omega()); break;
        case ModuleDocument::Kind::eigen: report_eigen(out, doc.as_eigen()); break;
        case ModuleDocument::Kind::elementary: report_elementary(out, doc.as_elementary()); break;
        case ModuleDocument::Kind::isogeny: report_isogeny(out, doc.as_isogeny()); break;
    }
    return out.str();
}

std::string invariants_report_json(const ModuleDocument& doc) {
    json out = json::object();
    out["kind"] = kind_name(doc.kind);
    json notes = json::array();
    switch (doc.kind) {
        case ModuleDocument::Kind::lambda: {
            const LambdaModule& m = doc.as_lambda();
            out["p"] = m.ctx().p().get_str();
            out["generators"] = m.generators();
            out["relations"] = m.relation_count();
            out["lambda_rank"] = lambda_rank(m);
            bool short_res = has_short_resolution(m);
            out["short_resolution"] = short_res;
            if (short_res) {
                HomologyProfile h = homology(m);
                out["h0"] = h.h0.str();
                out["h1"] = h.h1.str();
                out["euler_rank"] = euler_rank(m);
                auto exponent = euler_char_order_exponent(m);
                if (exponent) {
                    out["chi_order_exponent"] = *exponent;
                } else {
                    out["chi_order_exponent"] = nullptr;
                }
                out["p_torsion_rank"] = p_torsion_rank(m);
            } else {
                notes.push_back("homology unavailable; presentation is not injective");
            }
            if (m.relation_count() == m.generators()) {
                try {
                    WeierstrassData w = char_invariants(m);
                    out["mu"] = w.mu;
                    out["lambda_invariant"] = w.lambda;
                } catch (const not_torsion_error&) {
                    notes.push_back("determinant vanishes; mu/lambda undefined");
                }
            } else {
                notes.push_back("mu/lambda need a square presentation");
            }
            break;
        }
        case ModuleDocument::Kind::omega: {
            const OmegaModule& n = doc.as_omega();
            out["p"] = n.ctx().p().get_str();
            out["generators"] = n.generators();
            out["relations"] = n.relation_count();
            out["omega_rank"] = omega_rank(n);
            try {
                out["omega_euler_rank"] = omega_euler_rank(n);
            } catch (const unsupported_presentation_error&) {
                notes.push_back("euler form unavailable; presentation is not injective");
            }
            break;
        }
        case ModuleDocument::Kind::eigen: {
            const EigenModule& m = doc.as_eigen();
            out["p"] = m.descriptor().ctx.p().get_str();
            out["action_exponent"] = m.descriptor().action_exponent;
            json ranks = json::object();
            for (const auto& [index, module] : m.components()) {
                ranks[std::to_string(index)] = lambda_rank(module);
            }
            out["component_lambda_ranks"] = std::move(ranks);
            out["gamma_rank"] = gamma_rank(m);
            HomologyProfile h = g_homology(m);
            out["h0"] = h.h0.str();
            out["h1"] = h.h1.str();
            out["hmrank"] = hmrank(m);
            break;
        }
        case ModuleDocument::Kind::elementary: {
            const ElementaryModule& e = doc.as_elementary();
            out["p"] = e.ctx().p().get_str();
            ElementaryInvariants inv = elementary_invariants(e);
            out["rank"] = inv.rank;
            out["mu"] = inv.mu;
            out["lambda_invariant"] = inv.lambda;
            out["h0"] = inv.homology.h0.str();
            out["h1"] = inv.homology.h1.str();
            break;
        }
        case ModuleDocument::Kind::isogeny: {
            const IsogenyData& d = doc.as_isogeny();
            out["p"] = d.ctx().p().get_str();
            out["global_degree"] = d.global_degree();
            out["kernel_exponent"] = d.kernel_exponent();
            out["tate_global_exponent"] = tate_global_exponent(d);
            long locals = 0;
            for (const auto& place : d.p_places()) locals += tate_local_exponent(place);
            out["tate_local_exponent_sum"] = locals;
            out["delta_mu"] = isogeny_mu_delta(d);
            out["assumption_l"] = d.localization_surjective_asserted();
            break;
        }
    }
    if (!notes.empty()) out["notes"] = std::move(notes);
    return out.dump(2) + "\n";
}

BuiltinExample builtin_example(const std::string& name) {
    if (name == "remark2") {
        PrimeContext five(5);
        Mat<IwasawaElement> rel(1, 1);
        rel.at(0, 0) = IwasawaElement::variable();
        LambdaModule trivial_gamma_action = LambdaModule::make(five, 1, std::move(rel));
        EigenModule m = EigenModule::make(
            GDescriptor::make(five, 1),
            std::map<long, LambdaModule>{{1, std::move(trivial_gamma_action)}});
        long rank = hmrank(m);
        BuiltinExample out{name, document_from(std::move(m)), ""};
        out.note = "hmrank: " + std::to_string(rank) + "\n";
        return out;
    }
    if (name == "conductor11") {
        PrimeContext five(5);
        std::vector<ArchPlaceDatum> arch{{ArchKind::complex_place, 1},
                                         {ArchKind::complex_place, 1}};
        std::vector<PAdicPlaceDatum> padic{{4, 1}};
        IsogenyData d = IsogenyData::make(five, 4, 1, std::move(arch), std::move(padic));
        long delta = isogeny_mu_delta(d);
        BuiltinExample out{name, document_from(std::move(d)), ""};
        out.note = "delta_mu: " + std::to_string(delta) + " (one half of the degree 4)\n";
        return out;
    }
    if (name == "theorem-k") {
        BuiltinExample out{name, std::nullopt, ""};
        std::ostringstream note;
        note << "rank_cyc: 0\n";
        note << "split_multiplicative_primes: 4\n";
        note << "hmrank: " << theorem_k_hmrank(0, 4) << "\n";
        out.note = note.str();
        return out;
    }
    throw domain_error("unknown example \"" + name +
                       "\"; known names: remark2, conductor11, theorem-k");
}

} // namespace iwa
