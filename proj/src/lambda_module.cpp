#include "iwa/lambda_module.hpp"

#include <string>
#include <utility>
#include <vector>

#include "iwa/omega_module.hpp"
#include "iwa/rank.hpp"

namespace iwa {

LambdaModule::LambdaModule(PrimeContext ctx, long gens, Mat<IwasawaElement> rel)
    : ctx_(std::move(ctx)), gens_(gens), rel_(std::move(rel)) {}

LambdaModule LambdaModule::make(PrimeContext ctx, long generators, Mat<IwasawaElement> relations) {
    if (generators < 0) throw format_error("module: negative generator count");
    if (static_cast<long>(relations.rows()) != generators) {
        throw format_error("module: relation matrix has " + std::to_string(relations.rows()) +
                           " rows, expected one per generator (" + std::to_string(generators) +
                           ")");
    }
    return LambdaModule(std::move(ctx), generators, std::move(relations));
}

Mat<mpz_class> LambdaModule::relations_at_zero() const {
    Mat<mpz_class> out(rel_.rows(), rel_.cols());
    for (std::size_t i = 0; i < rel_.rows(); ++i) {
        for (std::size_t j = 0; j < rel_.cols(); ++j) {
            out.at(i, j) = rel_.at(i, j).constant_term();
        }
    }
    return out;
}

long lambda_rank(const LambdaModule& m) {
    return m.generators() - rank_over_rational_functions(m.relations());
}

bool has_short_resolution(const LambdaModule& m) {
    return rank_over_rational_functions(m.relations()) == m.relation_count();
}

namespace {

void require_short_resolution(const LambdaModule& m, const char* op) {
    if (!has_short_resolution(m)) {
        throw unsupported_presentation_error(
            std::string(op) +
            ": relation matrix is not injective; re-present the module with "
            "independent relation columns");
    }
}

} // namespace

HomologyProfile homology(const LambdaModule& m) {
    require_short_resolution(m, "homology");
    std::vector<long> valuations = p_local_divisor_valuations(m.relations_at_zero(), m.ctx());
    long rank_a0 = static_cast<long>(valuations.size());
    std::vector<long> exps;
    for (long v : valuations) {
        if (v > 0) exps.push_back(v);
    }
    ZpModuleShape h0 = ZpModuleShape::make(m.generators() - rank_a0, std::move(exps));
    ZpModuleShape h1 = ZpModuleShape::free(m.relation_count() - rank_a0);
    return HomologyProfile{std::move(h0), std::move(h1)};
}

long euler_rank(const LambdaModule& m) {
    HomologyProfile h = homology(m);
    return h.h0.free_rank - h.h1.free_rank;
}

std::optional<long> euler_char_order_exponent(const LambdaModule& m) {
    HomologyProfile h = homology(m);
    if (!h.h0.is_finite() || !h.h1.is_finite()) return std::nullopt;
    return h.h0.torsion_length() - h.h1.torsion_length();
}

WeierstrassData char_invariants(const LambdaModule& m) {
    if (m.relation_count() != m.generators()) {
        throw unsupported_presentation_error(
            "char_invariants: needs a square presentation (as many relations as generators)");
    }
    IwasawaElement det = matrix_determinant(m.relations());
    if (det.is_zero()) {
        throw not_torsion_error("char_invariants: determinant vanishes, module is not torsion");
    }
    return weierstrass_prepare(det, m.ctx());
}

namespace {

// Element of Lambda written over the subgroup algebra: a polynomial in T of
// degree < q whose coefficients are polynomials in S, where S = (1+T)^q - 1.
using TowerElement = std::vector<IwasawaElement>;

// Multiply by T and reduce via T^q = S - sum_{j=1}^{q-1} C(q,j) T^j.
TowerElement tower_mul_t(const TowerElement& t, const std::vector<mpz_class>& binomials) {
    const std::size_t q = t.size();
    TowerElement out(q);
    const IwasawaElement& top = t[q - 1];
    out[0] = top * IwasawaElement::variable();
    for (std::size_t j = 1; j < q; ++j) {
        out[j] = t[j - 1] - IwasawaElement(binomials[j]) * top;
    }
    return out;
}

TowerElement tower_embed(const IwasawaElement& f, std::size_t q,
                         const std::vector<mpz_class>& binomials) {
    TowerElement acc(q);
    TowerElement power(q);
    power[0] = IwasawaElement(1);
    for (long m = 0; m <= f.degree(); ++m) {
        mpz_class c = f.coeff(static_cast<std::size_t>(m));
        if (c != 0) {
            IwasawaElement scalar(c);
            for (std::size_t i = 0; i < q; ++i) acc[i] = acc[i] + scalar * power[i];
        }
        if (m < f.degree()) power = tower_mul_t(power, binomials);
    }
    return acc;
}

} // namespace

LambdaModule restrict_to_subgroup(const LambdaModule& m, long k) {
    if (k < 1) throw domain_error("restrict_to_subgroup: subgroup index exponent must be >= 1");
    mpz_class qz;
    mpz_pow_ui(qz.get_mpz_t(), m.ctx().p().get_mpz_t(), static_cast<unsigned long>(k));
    if (!qz.fits_ulong_p() || qz.get_ui() > 4096) {
        throw domain_error("restrict_to_subgroup: index p^k too large to present");
    }
    const std::size_t q = qz.get_ui();

    std::vector<mpz_class> binomials(q);
    for (std::size_t j = 0; j < q; ++j) {
        mpz_bin_uiui(binomials[j].get_mpz_t(), static_cast<unsigned long>(q),
                     static_cast<unsigned long>(j));
    }

    const std::size_t b = static_cast<std::size_t>(m.generators());
    const std::size_t a = static_cast<std::size_t>(m.relation_count());
    Mat<IwasawaElement> out(q * b, q * a);
    for (std::size_t r = 0; r < a; ++r) {
        // Column towers for T^j * (relation r), one generator at a time.
        std::vector<TowerElement> towers(b);
        for (std::size_t g = 0; g < b; ++g) {
            towers[g] = tower_embed(m.relations().at(g, r), q, binomials);
        }
        for (std::size_t j = 0; j < q; ++j) {
            for (std::size_t g = 0; g < b; ++g) {
                for (std::size_t i = 0; i < q; ++i) {
                    out.at(g * q + i, r * q + j) = towers[g][i];
                }
            }
            if (j + 1 < q) {
                for (std::size_t g = 0; g < b; ++g) {
                    towers[g] = tower_mul_t(towers[g], binomials);
                }
            }
        }
    }
    return LambdaModule::make(m.ctx(), static_cast<long>(q * b), std::move(out));
}

LambdaModule direct_sum(const LambdaModule& m, const LambdaModule& n) {
    if (m.ctx() != n.ctx()) {
        throw domain_error("direct_sum: modules live over different primes");
    }
    const std::size_t rows = m.relations().rows() + n.relations().rows();
    const std::size_t cols = m.relations().cols() + n.relations().cols();
    Mat<IwasawaElement> out(rows, cols);
    for (std::size_t i = 0; i < m.relations().rows(); ++i) {
        for (std::size_t j = 0; j < m.relations().cols(); ++j) {
            out.at(i, j) = m.relations().at(i, j);
        }
    }
    for (std::size_t i = 0; i < n.relations().rows(); ++i) {
        for (std::size_t j = 0; j < n.relations().cols(); ++j) {
            out.at(m.relations().rows() + i, m.relations().cols() + j) = n.relations().at(i, j);
        }
    }
    return LambdaModule::make(m.ctx(), m.generators() + n.generators(), std::move(out));
}

OmegaModule mod_p_reduction(const LambdaModule& m) {
    Mat<FpPoly> out(m.relations().rows(), m.relations().cols());
    for (std::size_t i = 0; i < out.rows(); ++i) {
        for (std::size_t j = 0; j < out.cols(); ++j) {
            out.at(i, j) = fp_reduce(m.relations().at(i, j), m.ctx());
        }
    }
    return OmegaModule::make(m.ctx(), m.generators(), std::move(out));
}

long p_torsion_rank(const LambdaModule& m) {
    require_short_resolution(m, "p_torsion_rank");
    return m.relation_count() - rank_over_fp_functions(m.relations(), m.ctx());
}

} // namespace iwa
