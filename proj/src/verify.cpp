#include "iwa/verify.hpp"

#include <json.hpp>

#include <functional>
#include <sstream>
#include <utility>

#include "iwa/corpus.hpp"
#include "iwa/document.hpp"
#include "iwa/rank.hpp"
#include "iwa/weierstrass.hpp"

namespace iwa {

namespace {

using json = nlohmann::ordered_json;

std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

std::string compact(const ModuleDocument& doc) {
    return json::parse(serialize_document(doc)).dump();
}

json poly_json(const IwasawaElement& f) {
    json arr = json::array();
    for (const auto& c : f.coefficients()) arr.push_back(c.get_str());
    return arr;
}

json int_matrix_json(const Mat<mpz_class>& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).get_str());
        rows.push_back(std::move(row));
    }
    return rows;
}

// Per-instance predicate driver: stops at the first counterexample.
class Suite {
public:
    explicit Suite(std::string name) { report_.identity = std::move(name); }

    bool active() const { return report_.pass; }

    void instance(bool ok, const std::function<std::string()>& counterexample) {
        if (!report_.pass) return;
        report_.instances += 1;
        if (!ok) {
            report_.pass = false;
            report_.counterexample = counterexample();
        }
    }

    VerificationReport finish() && { return std::move(report_); }

private:
    VerificationReport report_;
};

PrimeContext pick_prime(Rng& rng) {
    static const long primes[] = {3, 5, 7};
    return PrimeContext(primes[rng.range(0, 2)]);
}

long char_count(const PrimeContext& ctx) {
    mpz_class n = ctx.p() - 1;
    return n.get_si();
}

Mat<mpz_class> random_int_matrix(Rng& rng, const PrimeContext& ctx, long rows, long cols) {
    Mat<mpz_class> m(static_cast<std::size_t>(rows), static_cast<std::size_t>(cols));
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            mpz_class v(rng.range(-6, 6));
            long twist = rng.range(0, 3);
            for (long t = 1; t < twist; ++t) v *= ctx.p();
            m.at(i, j) = v;
        }
    }
    return m;
}

Mat<mpz_class> mat_mul(const Mat<mpz_class>& a, const Mat<mpz_class>& b) {
    Mat<mpz_class> out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < b.cols(); ++j) {
            mpz_class acc = 0;
            for (std::size_t k = 0; k < a.cols(); ++k) acc += a.at(i, k) * b.at(k, j);
            out.at(i, j) = acc;
        }
    }
    return out;
}

Mat<mpz_class> random_unimodular(Rng& rng, long n) {
    Mat<mpz_class> u(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
    for (long i = 0; i < n; ++i) u.at(static_cast<std::size_t>(i), static_cast<std::size_t>(i)) = 1;
    for (long t = 0; t < 2 * n; ++t) {
        long i = rng.range(0, n - 1);
        long k = rng.range(0, n - 1);
        switch (rng.range(0, 2)) {
            case 0:
                u.swap_rows(static_cast<std::size_t>(i), static_cast<std::size_t>(k));
                break;
            case 1:
                for (long j = 0; j < n; ++j) {
                    auto& cell = u.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
                    cell = -cell;
                }
                break;
            default:
                if (i != k) {
                    mpz_class c(rng.range(-3, 3));
                    for (long j = 0; j < n; ++j) {
                        u.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) +=
                            c * u.at(static_cast<std::size_t>(k), static_cast<std::size_t>(j));
                    }
                }
                break;
        }
    }
    return u;
}

// ---- padic_core identities ----

VerificationReport suite_weierstrass_multiplicativity(Rng& rng, long count) {
    Suite suite("weierstrass-multiplicativity");
    for (long i = 0; i < count && suite.active(); ++i) {
        PrimeContext ctx = pick_prime(rng);
        IwasawaElement f = random_iwasawa_element(rng, ctx, 4, 2, true);
        IwasawaElement g = random_iwasawa_element(rng, ctx, 4, 2, true);
        WeierstrassData wf = weierstrass_prepare(f, ctx);
        WeierstrassData wg = weierstrass_prepare(g, ctx);
        WeierstrassData wfg = weierstrass_prepare(f * g, ctx);
        bool ok = wfg.mu == wf.mu + wg.mu && wfg.lambda == wf.lambda + wg.lambda;
        suite.instance(ok, [&] {
            json j;
            j["p"] = ctx.p().get_str();
            j["f"] = poly_json(f);
            j["g"] = poly_json(g);
            return j.dump();
        });
    }
    return std::move(suite).finish();
}

VerificationReport suite_rank_invariance(Rng& rng, long count) {
    Suite suite("rank-invariance");
    for (long i = 0; i < count && suite.active(); ++i) {
        PrimeContext ctx = pick_prime(rng);
        LambdaModule m = random_injective_module(rng, ctx, CorpusOptions{4, 6, 2, 2, 4});
        Mat<IwasawaElement> a = m.relations();
        const long n_rows = static_cast<long>(a.rows());
        const long n_cols = static_cast<long>(a.cols());
        long before = rank_over_rational_functions(a);
        if (n_rows >= 2) {
            a.swap_rows(static_cast<std::size_t>(rng.range(0, n_rows - 1)),
                        static_cast<std::size_t>(rng.range(0, n_rows - 1)));
        }
        if (n_cols >= 2) {
            a.swap_cols(static_cast<std::size_t>(rng.range(0, n_cols - 1)),
                        static_cast<std::size_t>(rng.range(0, n_cols - 1)));
        }
        IwasawaElement scale = random_iwasawa_element(rng, ctx, 2, 1, true);
        std::size_t row = static_cast<std::size_t>(rng.range(0, n_rows - 1));
        for (std::size_t j = 0; j < a.cols(); ++j) a.at(row, j) = scale * a.at(row, j);
        bool ok = rank_over_rational_functions(a) == before;
        suite.instance(ok, [&] { return compact(document_from(m)); });
    }
    return std::move(suite).finish();
}

VerificationReport suite_snf_block_diagonal(Rng& rng, long count) {
    Suite suite("snf-block-diagonal");
    for (long i = 0; i < count && suite.active(); ++i) {
        PrimeContext ctx = pick_prime(rng);
        long r1 = rng.range(1, 4), c1 = rng.range(0, 4);
        long r2 = rng.range(1, 4), c2 = rng.range(0, 4);
        Mat<mpz_class> b1 = random_int_matrix(rng, ctx, r1, c1);
        Mat<mpz_class> b2 = random_int_matrix(rng, ctx, r2, c2);
        Mat<mpz_class> blk(static_cast<std::size_t>(r1 + r2), static_cast<std::size_t>(c1 + c2));
        for (long r = 0; r < r1; ++r)
            for (long c = 0; c < c1; ++c)
                blk.at(static_cast<std::size_t>(r), static_cast<std::size_t>(c)) =
                    b1.at(static_cast<std::size_t>(r), static_cast<std::size_t>(c));
        for (long r = 0; r < r2; ++r)
            for (long c = 0; c < c2; ++c)
                blk.at(static_cast<std::size_t>(r1 + r), static_cast<std::size_t>(c1 + c)) =
                    b2.at(static_cast<std::size_t>(r), static_cast<std::size_t>(c));
        bool ok = snf_p_local(blk, ctx) == snf_p_local(b1, ctx) + snf_p_local(b2, ctx);
        suite.instance(ok, [&] {
            json j;
            j["p"] = ctx.p().get_str();
            j["b1"] = int_matrix_json(b1);
            j["b2"] = int_matrix_json(b2);
            return j.dump();
        });
    }
    return std::move(suite).finish();
}

VerificationReport suite_snf_unimodular(Rng& rng, long count) {
    Suite suite("snf-unimodular");
    for (long i = 0; i < count && suite.active(); ++i) {
        PrimeContext ctx = pick_prime(rng);
        long rows = rng.range(1, 4), cols = rng.range(1, 4);
        Mat<mpz_class> b = random_int_matrix(rng, ctx, rows, cols);
        Mat<mpz_class> u = random_unimodular(rng, rows);
        bool ok = snf_p_local(mat_mul(u, b), ctx) == snf_p_local(b, ctx);
        suite.instance(ok, [&] {
            json j;
            j["p"] = ctx.p().get_str();
            j["b"] = int_matrix_json(b);
            j["u"] = int_matrix_json(u);
            return j.dump();
        });
    }
    return std::move(suite).finish();
}

// ---- lambda_modules identities ----

VerificationReport suite_theorem_a(Rng& rng, long count, bool corrupt = false) {
    Suite suite(corrupt ? "self-test-corrupt" : "theorem-a");
    for (long i = 0; i < count && suite.active(); ++i) {
        PrimeContext ctx = pick_prime(rng);
        LambdaModule m = random_injective_module(rng, ctx);
        long oracle = lambda_rank(m) + (corrupt ? 1 : 0);
        bool ok = euler_rank(m) == oracle;
        suite.instance(ok, [&] { return compact(document_from(m)); });
    }
    return std::move(suite).finish();
}

VerificationReport suite_nakayama(Rng& rng, long count) {
    Suite suite("nakayama");
    for (long i = 0; i < count && suite.active(); ++i) {
        PrimeContext ctx = pick_prime(rng);
        CorpusOptions opts;
        opts.square = rng.chance(1, 2);
        opts.nonzero_diagonal_constant = opts.square;
        LambdaModule m = random_injective_module(rng, ctx, opts);
        HomologyProfile h = homology(m);
        if (!h.h0.is_finite()) continue;  // filter: finite coinvariants only
        bool ok = lambda_rank(m) == 0 && h.h1.is_finite();
        suite.instance(ok, [&] { return compact(document_from(m)); });
    }
    return std::move(suite).finish();
}

VerificationReport suite_finite_homology_torsion(Rng& rng, long count) {
    Suite suite("finite-homology-torsion");
    for (long i = 0; i < count && suite.active(); ++i) {
        PrimeContext ctx = pick_prime(rng);
        CorpusOptions opts;
        opts.square = rng.chance(1, 2);
        opts.nonzero_diagonal_constant = opts.square;
        LambdaModule m = random_injective_module(rng, ctx, opts);
        HomologyProfile h = homology(m);
        if (!h.h0.is_finite() || !h.h1.is_finite()) continue;
        bool ok = lambda_rank(m) == 0;
        suite.instance(ok, [&] { return compact(document_from(m)); });
    }
    return std::move(suite).finish();
}

VerificationReport suite_torsion_zero_euler(Rng& rng, long count) {
    Suite suite("torsion-zero-euler");
    for (long i = 0; i < count && suite.active(); ++i) {
        PrimeContext ctx = pick_prime(rng);
        LambdaModule m = random_square_torsion_module(rng, ctx);
        bool ok = lambda_rank(m) == 0 && euler_rank(m) == 0;
        suite.instance(ok, [&] { return compact(document_from(m)); });
    }
    return std::move(suite).finish();
}

VerificationReport suite_subgroup_restriction(Rng& rng, long count) {
    Suite suite("subgroup-restriction");
    for (long i = 0; i < count && suite.active(); ++i) {
        PrimeContext ctx(rng.chance(1, 2) ? 3 : 5);
        long k = rng.range(1, 2);
        // Index p^2 restrictions multiply the presentation size by p^2; keep
        // the seeds small there so the corpus stays affordable.
        bool big_index = ctx.p() == 5 && k == 2;
        CorpusOptions opts;
        opts.max_generators = big_index ? 2 : 3;
        opts.max_entry_degree = big_index ? 4 : 6;
        opts.max_transforms = 3;
        LambdaModule m = random_injective_module(rng, ctx, opts);
        LambdaModule restricted = restrict_to_subgroup(m, k);
        mpz_class q;
        mpz_pow_ui(q.get_mpz_t(), ctx.p().get_mpz_t(), static_cast<unsigned long>(k));
        bool ok = lambda_rank(restricted) == q.get_si() * lambda_rank(m);
        suite.instance(ok, [&] {
            json j;
            j["k"] = k;
            j["module"] = json::parse(compact(document_from(m)));
            return j.dump();
        });
    }
    return std::move(suite).finish();
}

VerificationReport suite_eq_300(Rng& rng, long count) {
    Suite suite("eq-300");
    for (long i = 0; i < count && suite.active(); ++i) {
        PrimeContext ctx = pick_prime(rng);
        LambdaModule m = random_injective_module(rng, ctx);
        long mod_p_rank = omega_rank(mod_p_reduction(m));
        bool ok = mod_p_rank == p_torsion_rank(m) + lambda_rank(m);
        suite.instance(ok, [&] { return compact(document_from(m)); });
    }
    return std::move(suite).finish();
}

VerificationReport suite_char_additivity(Rng& rng, long count) {
    Suite suite("char-additivity");
    for (long i = 0; i < count && suite.active(); ++i) {
        PrimeContext ctx = pick_prime(rng);
        CorpusOptions opts{4, 6, 2, 2, 4};
        LambdaModule m = random_square_torsion_module(rng, ctx, opts);
        LambdaModule n = random_square_torsion_module(rng, ctx, opts);
        WeierstrassData wm = char_invariants(m);
        WeierstrassData wn = char_invariants(n);
        WeierstrassData wsum = char_invariants(direct_sum(m, n));
        bool ok = wsum.mu == wm.mu + wn.mu && wsum.lambda == wm.lambda + wn.lambda;
        suite.instance(ok, [&] { return compact(document_from(direct_sum(m, n))); });
    }
    return std::move(suite).finish();
}

// ---- omega_modules identities ----

VerificationReport suite_mu_oracle(Rng& rng, long count) {
    Suite suite("mu-oracle");
    for (long i = 0; i < count && suite.active(); ++i) {
        PrimeContext ctx = pick_prime(rng);
        ElementaryModule e = random_elementary_module(rng, ctx, rng.chance(2, 3));
        ElementaryInvariants closed = elementary_invariants(e);
        LambdaModule pres = to_presentation(e);
        bool ok = lambda_rank(pres) == closed.rank && homology(pres) == closed.homology;
        if (ok) {
            if (e.is_torsion()) {
                WeierstrassData w = char_invariants(pres);
                ok = w.mu == closed.mu && w.lambda == closed.lambda;
            } else {
                try {
                    (void)char_invariants(pres);
                    ok = false;  // non-square presentations must be refused
                } catch (const unsupported_presentation_error&) {
                }
            }
        }
        suite.instance(ok, [&] { return compact(document_from(e)); });
    }
    return std::move(suite).finish();
}

VerificationReport suite_mu_extension_additivity(Rng& rng, long count) {
    Suite suite("mu-extension-additivity");
    for (long i = 0; i < count && suite.active(); ++i) {
        PrimeContext ctx = pick_prime(rng);
        ElementaryModule ea = random_elementary_module(rng, ctx, true);
        ElementaryModule ec = random_elementary_module(rng, ctx, true);
        LambdaModule pa = to_presentation(ea);
        LambdaModule pc = to_presentation(ec);
        long na = pa.generators();
        long nc = pc.generators();
        Mat<IwasawaElement> b(static_cast<std::size_t>(na + nc),
                              static_cast<std::size_t>(na + nc));
        for (long r = 0; r < na; ++r)
            for (long c = 0; c < na; ++c)
                b.at(static_cast<std::size_t>(r), static_cast<std::size_t>(c)) =
                    pa.relations().at(static_cast<std::size_t>(r), static_cast<std::size_t>(c));
        for (long r = 0; r < nc; ++r)
            for (long c = 0; c < nc; ++c)
                b.at(static_cast<std::size_t>(na + r), static_cast<std::size_t>(na + c)) =
                    pc.relations().at(static_cast<std::size_t>(r), static_cast<std::size_t>(c));
        for (long r = 0; r < nc; ++r)
            for (long c = 0; c < na; ++c)
                b.at(static_cast<std::size_t>(na + r), static_cast<std::size_t>(c)) =
                    random_iwasawa_element(rng, ctx, 2, 1, false);
        LambdaModule ext = LambdaModule::make(ctx, na + nc, std::move(b));
        WeierstrassData w = char_invariants(ext);
        long mu_a = elementary_invariants(ea).mu;
        long mu_c = elementary_invariants(ec).mu;
        bool ok = w.mu == mu_a + mu_c;
        // Direct sum with a free part only bounds mu from above.
        ElementaryModule with_free = ElementaryModule::make(
            ctx, rng.range(1, 2), ea.p_power_exponents(), ea.distinguished_parts());
        ok = ok && elementary_invariants(with_free).mu <= mu_a;
        suite.instance(ok, [&] { return compact(document_from(ext)); });
    }
    return std::move(suite).finish();
}

VerificationReport suite_chi_omega_exponent(Rng&, long) {
    Suite suite("chi-omega-exponent");
    for (long p : {3L, 5L, 7L}) {
        if (!suite.active()) break;
        PrimeContext ctx(p);
        Mat<IwasawaElement> rel(1, 1);
        rel.at(0, 0) = IwasawaElement(ctx.p());
        LambdaModule omega_as_module = LambdaModule::make(ctx, 1, std::move(rel));
        HomologyProfile h = homology(omega_as_module);
        auto exponent = euler_char_order_exponent(omega_as_module);
        bool ok = h.h0 == ZpModuleShape::make(0, {1}) && h.h1.is_trivial() && exponent &&
                  *exponent == 1;
        suite.instance(ok, [&] { return compact(document_from(omega_as_module)); });
    }
    return std::move(suite).finish();
}

VerificationReport suite_mu_chi_exponent(Rng& rng, long count) {
    Suite suite("mu-chi-exponent");
    for (long i = 0; i < count && suite.active(); ++i) {
        PrimeContext ctx = pick_prime(rng);
        ElementaryModule e = random_elementary_module(rng, ctx, true, true);
        auto exponent = euler_char_order_exponent(to_presentation(e));
        bool ok = exponent && *exponent == elementary_invariants(e).mu;
        suite.instance(ok, [&] { return compact(document_from(e)); });
    }
    return std::move(suite).finish();
}

VerificationReport suite_cyclic_annihilator(Rng& rng, long count) {
    Suite suite("cyclic-annihilator");
    for (long i = 0; i < count && suite.active(); ++i) {
        PrimeContext ctx = pick_prime(rng);
        IwasawaElement lift = random_iwasawa_element(rng, ctx, 5, 1, true);
        FpPoly g = fp_reduce(lift, ctx);
        if (g.is_zero()) g = FpPoly{{mpz_class(1)}};
        bool ok = cyclic_annihilated_rank(g, ctx) == 0;
        suite.instance(ok, [&] {
            json j;
            j["p"] = ctx.p().get_str();
            j["g"] = poly_json(lift);
            return j.dump();
        });
    }
    return std::move(suite).finish();
}

VerificationReport suite_omega_rank_two_path(Rng& rng, long count) {
    Suite suite("omega-rank-two-path");
    for (long i = 0; i < count && suite.active(); ++i) {
        PrimeContext ctx = pick_prime(rng);
        LambdaModule m = random_injective_module(rng, ctx);
        OmegaModule n = mod_p_reduction(m);
        if (fp_matrix_rank(n.relations(), ctx) != n.relation_count()) continue;
        bool ok = omega_euler_rank(n) == omega_rank(n);
        suite.instance(ok, [&] { return compact(document_from(n)); });
    }
    return std::move(suite).finish();
}

// ---- group_euler identities ----

VerificationReport suite_hmrank_additivity(Rng& rng, long count) {
    Suite suite("hmrank-additivity");
    for (long i = 0; i < count && suite.active(); ++i) {
        PrimeContext ctx = pick_prime(rng);
        GDescriptor g = GDescriptor::make(ctx, rng.range(0, char_count(ctx) - 1));
        EigenModule m = random_eigen_module(rng, g, CorpusOptions{3, 5, 2, 2, 3});
        EigenModule n = random_eigen_module(rng, g, CorpusOptions{3, 5, 2, 2, 3});
        bool ok = hmrank(direct_sum(m, n)) == hmrank(m) + hmrank(n);
        suite.instance(ok, [&] { return compact(document_from(direct_sum(m, n))); });
    }
    return std::move(suite).finish();
}

VerificationReport suite_twist_identity(Rng& rng, long count) {
    Suite suite("twist-identity");
    for (long i = 0; i < count && suite.active(); ++i) {
        PrimeContext ctx = pick_prime(rng);
        GDescriptor g = GDescriptor::make(ctx, 0);
        const long chars = g.character_count();
        EigenModule m = random_eigen_module(rng, g, CorpusOptions{3, 5, 2, 2, 3});
        long j = rng.range(0, chars - 1);
        long source = ((chars - j) % chars + chars) % chars;  // index -j
        const LambdaModule* comp = m.component(source);
        long expected = comp ? lambda_rank(*comp) : 0;
        bool ok = hmrank(twist(m, j)) == expected;
        suite.instance(ok, [&] {
            json out;
            out["j"] = j;
            out["module"] = json::parse(compact(document_from(m)));
            return out.dump();
        });
    }
    return std::move(suite).finish();
}

VerificationReport suite_induction_identity(Rng& rng, long count) {
    Suite suite("induction-identity");
    for (long i = 0; i < count && suite.active(); ++i) {
        PrimeContext ctx = pick_prime(rng);
        GDescriptor g = GDescriptor::make(ctx, rng.range(0, char_count(ctx) - 1));
        LambdaModule n = random_injective_module(rng, ctx, CorpusOptions{4, 6, 2, 2, 4});
        bool ok = hmrank(induce(n, g)) == lambda_rank(n);
        suite.instance(ok, [&] { return compact(document_from(n)); });
    }
    return std::move(suite).finish();
}

VerificationReport suite_direct_product_consistency(Rng& rng, long count) {
    Suite suite("direct-product-consistency");
    for (long i = 0; i < count && suite.active(); ++i) {
        PrimeContext ctx = pick_prime(rng);
        GDescriptor g = GDescriptor::make(ctx, 0);
        EigenModule m = random_eigen_module(rng, g, CorpusOptions{3, 5, 2, 2, 3});
        const LambdaModule* trivial_part = m.component(0);
        long expected = trivial_part ? euler_rank(*trivial_part) : 0;
        bool ok = hmrank(m) == expected;
        suite.instance(ok, [&] { return compact(document_from(m)); });
    }
    return std::move(suite).finish();
}

VerificationReport suite_regression_values(Rng&, long) {
    Suite suite("regression-values");
    PrimeContext five(5);

    // Rank-one twisted coefficient module over the semidirect group.
    Mat<IwasawaElement> rel_t(1, 1);
    rel_t.at(0, 0) = IwasawaElement::variable();
    LambdaModule zp_trivial_gamma = LambdaModule::make(five, 1, std::move(rel_t));
    GDescriptor semidirect = GDescriptor::make(five, 1);
    EigenModule twisted =
        EigenModule::make(semidirect, std::map<long, LambdaModule>{{1, zp_trivial_gamma}});
    HomologyProfile h = g_homology(twisted);
    suite.instance(hmrank(twisted) == -1 && h.h0.is_trivial() && h.h1 == ZpModuleShape::free(1),
                   [&] { return compact(document_from(twisted)); });

    // Free rank-one module concentrated in a nontrivial eigenspace.
    GDescriptor product = GDescriptor::make(five, 0);
    LambdaModule free_rank_one = LambdaModule::make(five, 1, Mat<IwasawaElement>(1, 0));
    EigenModule chi_isotypic =
        EigenModule::make(product, std::map<long, LambdaModule>{{1, free_rank_one}});
    suite.instance(hmrank(chi_isotypic) == 0 && gamma_rank(chi_isotypic) == 1,
                   [&] { return compact(document_from(chi_isotypic)); });

    return std::move(suite).finish();
}

// ---- arithmetic_formulas identities ----

VerificationReport suite_isogeny_two_path(Rng& rng, long count) {
    Suite suite("isogeny-two-path");
    for (long i = 0; i < count && suite.active(); ++i) {
        PrimeContext ctx(rng.chance(1, 2) ? 5 : 7);
        IsogenyData d = random_isogeny_data(rng, ctx);
        long locals = 0;
        for (const auto& place : d.p_places()) locals += tate_local_exponent(place);
        bool ok = isogeny_mu_delta(d) == tate_global_exponent(d) - locals;
        suite.instance(ok, [&] { return compact(document_from(d)); });
    }
    return std::move(suite).finish();
}

VerificationReport suite_degree_linearity(Rng& rng, long count) {
    Suite suite("degree-linearity");
    for (long i = 0; i < count && suite.active(); ++i) {
        PrimeContext ctx(rng.chance(1, 2) ? 5 : 7);
        IsogenyData d = random_isogeny_data(rng, ctx);
        long k = rng.range(1, 4);
        std::vector<ArchPlaceDatum> arch;
        std::vector<PAdicPlaceDatum> padic;
        for (long c = 0; c < k; ++c) {
            arch.insert(arch.end(), d.arch_places().begin(), d.arch_places().end());
            padic.insert(padic.end(), d.p_places().begin(), d.p_places().end());
        }
        IsogenyData scaled = IsogenyData::make(ctx, k * d.global_degree(), d.kernel_exponent(),
                                               std::move(arch), std::move(padic));
        bool ok = isogeny_mu_delta(scaled) == k * isogeny_mu_delta(d) &&
                  mu_over_extension(d, k, scaled) == k * isogeny_mu_delta(d);
        suite.instance(ok, [&] {
            json j;
            j["k"] = k;
            j["base"] = json::parse(compact(document_from(d)));
            return j.dump();
        });
    }
    return std::move(suite).finish();
}

VerificationReport suite_zero_kernel(Rng& rng, long count) {
    Suite suite("zero-kernel");
    for (long i = 0; i < count && suite.active(); ++i) {
        PrimeContext ctx(rng.chance(1, 2) ? 5 : 7);
        long n_real = rng.range(0, 2);
        long n_complex = rng.range(n_real == 0 ? 1 : 0, 2);
        std::vector<ArchPlaceDatum> arch;
        for (long r = 0; r < n_real; ++r) arch.push_back(ArchPlaceDatum{ArchKind::real, 0});
        for (long c = 0; c < n_complex; ++c)
            arch.push_back(ArchPlaceDatum{ArchKind::complex_place, 0});
        long degree = n_real + 2 * n_complex;
        std::vector<PAdicPlaceDatum> padic{PAdicPlaceDatum{degree, 0}};
        IsogenyData d = IsogenyData::make(ctx, degree, 0, std::move(arch), std::move(padic));
        long locals = 0;
        for (const auto& place : d.p_places()) locals += tate_local_exponent(place);
        bool ok = tate_global_exponent(d) == 0 && locals == 0 && isogeny_mu_delta(d) == 0;
        suite.instance(ok, [&] { return compact(document_from(d)); });
    }
    return std::move(suite).finish();
}

VerificationReport suite_formula_monotonicity(Rng& rng, long count) {
    Suite suite("formula-monotonicity");
    for (long i = 0; i < count && suite.active(); ++i) {
        long rank_cyc = rng.range(0, 8);
        long r = rng.range(0, 8);
        long ext = rng.range(1, 6);
        long lambda_cyc = rng.range(0, 8);
        long r_l = rng.range(0, 8);
        bool ok = theorem_k_hmrank(rank_cyc + 1, r) >= theorem_k_hmrank(rank_cyc, r) &&
                  theorem_k_hmrank(rank_cyc, r + 1) >= theorem_k_hmrank(rank_cyc, r) &&
                  lambda_growth(ext + 1, lambda_cyc, r, r_l) >=
                      lambda_growth(ext, lambda_cyc, r, r_l) &&
                  lambda_growth(ext, lambda_cyc + 1, r, r_l) >=
                      lambda_growth(ext, lambda_cyc, r, r_l) &&
                  lambda_growth(ext, lambda_cyc, r + 1, r_l) >=
                      lambda_growth(ext, lambda_cyc, r, r_l) &&
                  lambda_growth(ext, lambda_cyc, r, r_l + 1) <
                      lambda_growth(ext, lambda_cyc, r, r_l);
        suite.instance(ok, [&] {
            json j;
            j["rank_cyc"] = rank_cyc;
            j["r"] = r;
            j["ext_degree"] = ext;
            j["lambda_cyc"] = lambda_cyc;
            j["r_L"] = r_l;
            return j.dump();
        });
    }
    return std::move(suite).finish();
}

// ---- cli identities ----

VerificationReport suite_document_roundtrip(Rng& rng, long count) {
    Suite suite("document-roundtrip");
    for (long i = 0; i < count && suite.active(); ++i) {
        PrimeContext ctx = pick_prime(rng);
        ModuleDocument doc;
        switch (rng.range(0, 4)) {
            case 0:
                doc = document_from(random_injective_module(rng, ctx, CorpusOptions{3, 5, 2, 2, 3}));
                break;
            case 1:
                doc = document_from(
                    mod_p_reduction(random_injective_module(rng, ctx, CorpusOptions{3, 5, 2, 2, 3})));
                break;
            case 2: {
                GDescriptor g = GDescriptor::make(ctx, rng.range(0, char_count(ctx) - 1));
                doc = document_from(random_eigen_module(rng, g, CorpusOptions{2, 4, 2, 2, 2}));
                break;
            }
            case 3:
                doc = document_from(random_elementary_module(rng, ctx, false));
                break;
            default: {
                PrimeContext big(rng.chance(1, 2) ? 5 : 7);
                doc = document_from(random_isogeny_data(rng, big));
                break;
            }
        }
        std::string canonical = serialize_document(doc);
        std::string again = serialize_document(parse_document(canonical));
        bool ok = canonical == again;
        suite.instance(ok, [&] { return compact(doc); });
    }
    return std::move(suite).finish();
}

using SuiteFn = VerificationReport (*)(Rng&, long);

struct SuiteEntry {
    SuiteInfo info;
    SuiteFn fn;
};

VerificationReport run_self_test_corrupt(Rng& rng, long count) {
    return suite_theorem_a(rng, count, true);
}

VerificationReport run_theorem_a(Rng& rng, long count) { return suite_theorem_a(rng, count); }

const std::vector<SuiteEntry>& registry() {
    static const std::vector<SuiteEntry> entries = {
        {{"weierstrass-multiplicativity", "mu and lambda add under multiplication"}, //
         suite_weierstrass_multiplicativity},
        {{"rank-invariance", "rank unchanged by permutations and row scaling"},
         suite_rank_invariance},
        {{"snf-block-diagonal", "cokernel shapes combine componentwise"},
         suite_snf_block_diagonal},
        {{"snf-unimodular", "cokernel shape unchanged by unimodular row action"},
         suite_snf_unimodular},
        {{"theorem-a", "euler_rank equals lambda_rank on injective presentations"},
         run_theorem_a},
        {{"nakayama", "finite coinvariants force torsion and finite invariants"},
         suite_nakayama},
        {{"finite-homology-torsion", "finite homology in both degrees forces torsion"},
         suite_finite_homology_torsion},
        {{"torsion-zero-euler", "torsion modules have euler rank zero"},
         suite_torsion_zero_euler},
        {{"subgroup-restriction", "rank multiplies by the subgroup index"},
         suite_subgroup_restriction},
        {{"eq-300", "mod-p rank splits into p-torsion rank plus rank"}, suite_eq_300},
        {{"char-additivity", "mu and lambda add over direct sums"}, suite_char_additivity},
        {{"mu-oracle", "determinant-content invariants match the closed forms"},
         suite_mu_oracle},
        {{"mu-extension-additivity", "mu adds along torsion extensions"},
         suite_mu_extension_additivity},
        {{"chi-omega-exponent", "chi exponent of the mod-p algebra is 1"},
         suite_chi_omega_exponent},
        {{"mu-chi-exponent", "mu equals the chi order exponent on p-torsion modules"},
         suite_mu_chi_exponent},
        {{"cyclic-annihilator", "cyclic modules with annihilator have rank zero"},
         suite_cyclic_annihilator},
        {{"omega-rank-two-path", "omega rank agrees with its homology form"},
         suite_omega_rank_two_path},
        {{"hmrank-additivity", "hmrank adds over componentwise direct sums"},
         suite_hmrank_additivity},
        {{"twist-identity", "hmrank of a twist reads the opposite eigenspace rank"},
         suite_twist_identity},
        {{"induction-identity", "hmrank of an induced module is the input rank"},
         suite_induction_identity},
        {{"direct-product-consistency", "hmrank matches the trivial eigenspace euler rank"},
         suite_direct_product_consistency},
        {{"regression-values", "pinned hmrank values for the twisted examples"},
         suite_regression_values},
        {{"isogeny-two-path", "mu variation equals global minus local exponents"},
         suite_isogeny_two_path},
        {{"degree-linearity", "mu variation scales linearly with the degree"},
         suite_degree_linearity},
        {{"zero-kernel", "trivial kernels produce zero everywhere"}, suite_zero_kernel},
        {{"formula-monotonicity", "growth formulas are monotone in each argument"},
         suite_formula_monotonicity},
        {{"document-roundtrip", "serialize after parse is the identity on canonical form"},
         suite_document_roundtrip},
        {{"self-test-corrupt", "harness self-test: must report a counterexample", true},
         run_self_test_corrupt},
    };
    return entries;
}

} // namespace

const std::vector<SuiteInfo>& list_suites() {
    static const std::vector<SuiteInfo> infos = [] {
        std::vector<SuiteInfo> out;
        for (const auto& entry : registry()) out.push_back(entry.info);
        return out;
    }();
    return infos;
}

bool is_known_suite(const std::string& selector) {
    if (selector == "all") return true;
    for (const auto& entry : registry()) {
        if (entry.info.name == selector) return true;
    }
    return false;
}

std::vector<VerificationReport> run_verify(const std::string& selector, std::uint64_t seed,
                                           long count) {
    if (!is_known_suite(selector)) {
        throw domain_error("unknown verification suite \"" + selector + "\"");
    }
    std::vector<VerificationReport> reports;
    for (const auto& entry : registry()) {
        if (selector == "all" ? entry.info.hidden : entry.info.name != selector) continue;
        Rng rng(seed ^ fnv1a(entry.info.name));
        reports.push_back(entry.fn(rng, count));
    }
    return reports;
}

bool all_passed(const std::vector<VerificationReport>& reports) {
    for (const auto& report : reports) {
        if (!report.pass) return false;
    }
    return true;
}

std::string render_reports(const std::vector<VerificationReport>& reports) {
    std::ostringstream out;
    for (const auto& report : reports) {
        out << "suite=" << report.identity << " instances=" << report.instances
            << " result=" << (report.pass ? "PASS" : "FAIL");
        if (!report.pass) out << " counterexample=" << report.counterexample;
        out << "\n";
    }
    return out.str();
}

std::string render_reports_json(const std::vector<VerificationReport>& reports) {
    json arr = json::array();
    for (const auto& report : reports) {
        json entry = json::object();
        entry["suite"] = report.identity;
        entry["instances"] = report.instances;
        entry["result"] = report.pass ? "PASS" : "FAIL";
        if (!report.pass) entry["counterexample"] = json::parse(report.counterexample);
        arr.push_back(std::move(entry));
    }
    return arr.dump(2) + "\n";
}

} // namespace iwa
