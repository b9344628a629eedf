#include "iwa/corpus.hpp"

#include <algorithm>
#include <utility>
#include <vector>

#include "iwa/rank.hpp"

namespace iwa {

long Rng::range(long lo, long hi) {
    if (hi <= lo) return lo;
    std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<long>(next() % span);
}

namespace {

mpz_class random_coeff(Rng& rng, const PrimeContext& ctx, long bound_exp, bool nonzero) {
    mpz_class bound;
    mpz_pow_ui(bound.get_mpz_t(), ctx.p().get_mpz_t(), static_cast<unsigned long>(bound_exp));
    long b = bound.fits_slong_p() ? bound.get_si() : 1L << 20;
    long c = rng.range(-b, b);
    if (nonzero && c == 0) c = rng.chance(1, 2) ? 1 : -1;
    return mpz_class(c);
}

long entry_degree_cap(const Mat<IwasawaElement>& m) {
    long cap = 0;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            cap = std::max(cap, m.at(i, j).degree());
        }
    }
    return cap;
}

// Row/column operations with unit or degree<=1 multipliers; the module is
// unchanged up to isomorphism and injectivity of the matrix is preserved.
void scramble(Rng& rng, const PrimeContext& ctx, Mat<IwasawaElement>& m, long max_transforms,
              long max_entry_degree) {
    const long rows = static_cast<long>(m.rows());
    const long cols = static_cast<long>(m.cols());
    long ops = rng.range((max_transforms + 1) / 2, max_transforms);
    for (long t = 0; t < ops; ++t) {
        switch (rng.range(0, 3)) {
            case 0: {  // swap rows
                if (rows >= 2) {
                    long i = rng.range(0, rows - 1);
                    long k = rng.range(0, rows - 1);
                    m.swap_rows(static_cast<std::size_t>(i), static_cast<std::size_t>(k));
                }
                break;
            }
            case 1: {  // swap columns
                if (cols >= 2) {
                    long j = rng.range(0, cols - 1);
                    long l = rng.range(0, cols - 1);
                    m.swap_cols(static_cast<std::size_t>(j), static_cast<std::size_t>(l));
                }
                break;
            }
            case 2: {  // row_i += f * row_k
                if (rows < 2) break;
                long i = rng.range(0, rows - 1);
                long k = rng.range(0, rows - 2);
                if (k >= i) ++k;
                IwasawaElement f =
                    random_iwasawa_element(rng, ctx, rng.range(0, 2), 1, true);
                bool fits = true;
                for (long j = 0; j < cols; ++j) {
                    const auto& src = m.at(static_cast<std::size_t>(k),
                                           static_cast<std::size_t>(j));
                    if (!src.is_zero() && src.degree() + f.degree() > max_entry_degree) {
                        fits = false;
                        break;
                    }
                }
                if (!fits) break;
                for (long j = 0; j < cols; ++j) {
                    auto& dst = m.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
                    dst = dst + f * m.at(static_cast<std::size_t>(k),
                                         static_cast<std::size_t>(j));
                }
                break;
            }
            default: {  // col_j += f * col_l
                if (cols < 2) break;
                long j = rng.range(0, cols - 1);
                long l = rng.range(0, cols - 2);
                if (l >= j) ++l;
                IwasawaElement f =
                    random_iwasawa_element(rng, ctx, rng.range(0, 2), 1, true);
                bool fits = true;
                for (long i = 0; i < rows; ++i) {
                    const auto& src = m.at(static_cast<std::size_t>(i),
                                           static_cast<std::size_t>(l));
                    if (!src.is_zero() && src.degree() + f.degree() > max_entry_degree) {
                        fits = false;
                        break;
                    }
                }
                if (!fits) break;
                for (long i = 0; i < rows; ++i) {
                    auto& dst = m.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
                    dst = dst + f * m.at(static_cast<std::size_t>(i),
                                         static_cast<std::size_t>(l));
                }
                break;
            }
        }
    }
    // Degree cap is structural for the corpus, not merely probable.
    if (entry_degree_cap(m) > max_entry_degree) {
        throw domain_error("corpus: entry degree cap exceeded");
    }
}

} // namespace

IwasawaElement random_iwasawa_element(Rng& rng, const PrimeContext& ctx, long max_degree,
                                      long coeff_bound_exp, bool nonzero) {
    long degree = rng.range(0, max_degree);
    std::vector<mpz_class> coeffs(static_cast<std::size_t>(degree) + 1);
    for (auto& c : coeffs) c = random_coeff(rng, ctx, coeff_bound_exp, false);
    IwasawaElement f{std::move(coeffs)};
    if (nonzero && f.is_zero()) {
        return IwasawaElement::monomial(random_coeff(rng, ctx, coeff_bound_exp, true),
                                        static_cast<std::size_t>(rng.range(0, max_degree)));
    }
    return f;
}

LambdaModule random_injective_module(Rng& rng, const PrimeContext& ctx,
                                     const CorpusOptions& opts) {
    long b = rng.range(1, opts.max_generators);
    long a = opts.square ? b : rng.range(0, b);
    Mat<IwasawaElement> m(static_cast<std::size_t>(b), static_cast<std::size_t>(a));
    for (long d = 0; d < a; ++d) {
        IwasawaElement seed =
            random_iwasawa_element(rng, ctx, opts.seed_degree, opts.coeff_bound_exp, true);
        if (opts.nonzero_diagonal_constant && seed.constant_term() == 0) {
            seed = seed + IwasawaElement(random_coeff(rng, ctx, opts.coeff_bound_exp, true));
        }
        m.at(static_cast<std::size_t>(d), static_cast<std::size_t>(d)) = std::move(seed);
    }
    scramble(rng, ctx, m, opts.max_transforms, opts.max_entry_degree);
    LambdaModule out = LambdaModule::make(ctx, b, std::move(m));
    if (!has_short_resolution(out)) {
        throw domain_error("corpus: generated presentation lost injectivity");
    }
    return out;
}

LambdaModule random_square_torsion_module(Rng& rng, const PrimeContext& ctx,
                                          const CorpusOptions& opts) {
    CorpusOptions square = opts;
    square.square = true;
    return random_injective_module(rng, ctx, square);
}

ElementaryModule random_elementary_module(Rng& rng, const PrimeContext& ctx, bool torsion_only,
                                          bool p_torsion_only) {
    long free_rank = torsion_only || p_torsion_only ? 0 : rng.range(0, 2);
    std::vector<long> p_exps;
    long n_p = rng.range(p_torsion_only ? 1 : 0, 3);
    for (long i = 0; i < n_p; ++i) p_exps.push_back(rng.range(1, 4));
    std::vector<DistinguishedPart> dist;
    if (!p_torsion_only) {
        long n_dist = rng.range(0, 2);
        for (long i = 0; i < n_dist; ++i) {
            long degree = rng.range(1, 3);
            std::vector<mpz_class> coeffs(static_cast<std::size_t>(degree) + 1);
            for (long j = 0; j < degree; ++j) {
                coeffs[static_cast<std::size_t>(j)] =
                    ctx.p() * random_coeff(rng, ctx, 1, false);
            }
            coeffs[static_cast<std::size_t>(degree)] = 1;
            dist.push_back(
                DistinguishedPart{IwasawaElement(std::move(coeffs)), rng.range(1, 2)});
        }
    }
    if (free_rank == 0 && p_exps.empty() && dist.empty()) p_exps.push_back(rng.range(1, 3));
    return ElementaryModule::make(ctx, free_rank, std::move(p_exps), std::move(dist));
}

EigenModule random_eigen_module(Rng& rng, const GDescriptor& g, const CorpusOptions& opts) {
    const long chars = g.character_count();
    std::map<long, LambdaModule> components;
    long count = rng.range(0, std::min(chars, 3L));
    for (long i = 0; i < count; ++i) {
        long index = rng.range(0, chars - 1);
        if (components.find(index) != components.end()) continue;
        components.emplace(index, random_injective_module(rng, g.ctx, opts));
    }
    return EigenModule::make(g, std::move(components));
}

IsogenyData random_isogeny_data(Rng& rng, const PrimeContext& ctx) {
    long kernel_exponent = rng.range(0, 3);
    long n_real = rng.range(0, 3);
    long n_complex = rng.range(n_real == 0 ? 1 : 0, 3);
    std::vector<ArchPlaceDatum> arch;
    for (long i = 0; i < n_real; ++i) {
        arch.push_back(ArchPlaceDatum{ArchKind::real, rng.range(0, kernel_exponent)});
    }
    for (long i = 0; i < n_complex; ++i) {
        arch.push_back(ArchPlaceDatum{ArchKind::complex_place, kernel_exponent});
    }
    long degree = n_real + 2 * n_complex;
    std::vector<PAdicPlaceDatum> p_places;
    long remaining = degree;
    while (remaining > 0) {
        long d = rng.range(1, remaining);
        p_places.push_back(PAdicPlaceDatum{d, rng.range(0, 3)});
        remaining -= d;
    }
    return IsogenyData::make(ctx, degree, kernel_exponent, std::move(arch), std::move(p_places));
}

} // namespace iwa
