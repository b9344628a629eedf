// Acceptance gate: every headline identity at full corpus size, exact
// equality throughout, one PASS/FAIL line per criterion.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "iwa/corpus.hpp"
#include "iwa/document.hpp"
#include "iwa/eigen_module.hpp"
#include "iwa/elementary.hpp"
#include "iwa/isogeny.hpp"
#include "iwa/rank.hpp"

using namespace iwa;

namespace {

constexpr std::uint64_t kSeed = 20250809;

struct Outcome {
    bool pass = true;
    std::string detail;
};

class Check {
public:
    void fail(const std::string& why) {
        if (outcome_.pass) {
            outcome_.pass = false;
            outcome_.detail = why;
        }
    }
    void expect(bool ok, const std::function<std::string()>& why) {
        if (ok || !outcome_.pass) return;
        fail(why());
    }
    Outcome take(std::string pass_detail) && {
        if (outcome_.pass) outcome_.detail = std::move(pass_detail);
        return std::move(outcome_);
    }

private:
    Outcome outcome_;
};

std::string describe(const LambdaModule& m) {
    return serialize_document(document_from(m));
}

// 1. rank two-path equality on 500 injective presentations within 60 s.
Outcome criterion_rank_two_path() {
    Check check;
    auto start = std::chrono::steady_clock::now();
    Rng rng(kSeed);
    const long total = 500;
    for (long i = 0; i < total; ++i) {
        PrimeContext ctx(i % 3 == 0 ? 3 : (i % 3 == 1 ? 5 : 7));
        LambdaModule m = random_injective_module(rng, ctx);  // up to 6x6, degree <= 8
        check.expect(euler_rank(m) == lambda_rank(m), [&] { return describe(m); });
    }
    auto elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start);
    check.expect(elapsed.count() < 60.0, [&] {
        return "runtime " + std::to_string(elapsed.count()) + "s exceeds 60s";
    });
    std::ostringstream detail;
    detail << total << " instances exact, " << elapsed.count() << "s";
    return std::move(check).take(detail.str());
}

// 2. finite coinvariants force rank zero and finite invariants, always.
Outcome criterion_nakayama() {
    Check check;
    Rng rng(kSeed + 1);
    long hits = 0;
    for (long i = 0; i < 600; ++i) {
        PrimeContext ctx(i % 2 == 0 ? 3 : 5);
        CorpusOptions opts;
        opts.square = i % 2 == 0;
        opts.nonzero_diagonal_constant = opts.square;
        LambdaModule m = random_injective_module(rng, ctx, opts);
        HomologyProfile h = homology(m);
        if (!h.h0.is_finite()) continue;
        ++hits;
        check.expect(lambda_rank(m) == 0 && h.h1.is_finite(), [&] { return describe(m); });
    }
    check.expect(hits >= 100, [&] {
        return "only " + std::to_string(hits) + " filtered instances";
    });
    return std::move(check).take(std::to_string(hits) + " filtered instances, 100% hold");
}

// 3. mod-p rank = p-torsion rank + rank on 500 instances.
Outcome criterion_mod_p_split() {
    Check check;
    Rng rng(kSeed + 2);
    const long total = 500;
    for (long i = 0; i < total; ++i) {
        PrimeContext ctx(i % 3 == 0 ? 3 : (i % 3 == 1 ? 5 : 7));
        LambdaModule m = random_injective_module(rng, ctx);
        bool ok = omega_rank(mod_p_reduction(m)) == p_torsion_rank(m) + lambda_rank(m);
        check.expect(ok, [&] { return describe(m); });
    }
    return std::move(check).take(std::to_string(total) + " instances exact");
}

// 4. restriction multiplies rank by p^k for k in {1,2}, p in {3,5}.
Outcome criterion_restriction() {
    Check check;
    Rng rng(kSeed + 3);
    long total = 0;
    for (long p : {3L, 5L}) {
        for (long k : {1L, 2L}) {
            PrimeContext ctx(p);
            bool big = p == 5 && k == 2;
            CorpusOptions opts;
            opts.max_generators = big ? 2 : 3;
            opts.max_entry_degree = big ? 4 : 6;
            opts.max_transforms = 3;
            long q = 1;
            for (long j = 0; j < k; ++j) q *= p;
            for (long i = 0; i < 30; ++i) {
                LambdaModule m = random_injective_module(rng, ctx, opts);
                ++total;
                bool ok = lambda_rank(restrict_to_subgroup(m, k)) == q * lambda_rank(m);
                check.expect(ok, [&] {
                    return "p=" + std::to_string(p) + " k=" + std::to_string(k) + "\n" +
                           describe(m);
                });
            }
        }
    }
    return std::move(check).take(std::to_string(total) + " instances exact across the grid");
}

// 5. determinant-content mu equals the closed-form mu, including on
//    block-triangular torsion extensions.
Outcome criterion_mu_oracle() {
    Check check;
    Rng rng(kSeed + 4);
    const long elementary_total = 200;
    for (long i = 0; i < elementary_total; ++i) {
        PrimeContext ctx(i % 2 == 0 ? 3 : 5);
        ElementaryModule e = random_elementary_module(rng, ctx, true);
        ElementaryInvariants closed = elementary_invariants(e);
        WeierstrassData w = char_invariants(to_presentation(e));
        check.expect(w.mu == closed.mu && w.lambda == closed.lambda, [&] {
            return serialize_document(document_from(e));
        });
    }
    const long extension_total = 100;
    for (long i = 0; i < extension_total; ++i) {
        PrimeContext ctx(5);
        ElementaryModule ea = random_elementary_module(rng, ctx, true);
        ElementaryModule ec = random_elementary_module(rng, ctx, true);
        LambdaModule pa = to_presentation(ea);
        LambdaModule pc = to_presentation(ec);
        const long na = pa.generators();
        const long nc = pc.generators();
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
        bool ok = char_invariants(ext).mu ==
                  elementary_invariants(ea).mu + elementary_invariants(ec).mu;
        check.expect(ok, [&] { return describe(ext); });
    }
    return std::move(check).take(std::to_string(elementary_total) + " elementary + " +
                                 std::to_string(extension_total) + " extensions exact");
}

// 6. chi exponent of the mod-p algebra: H0 = Z/p, H1 = 0, exponent 1.
Outcome criterion_chi_omega() {
    Check check;
    for (long p : {3L, 5L, 7L}) {
        PrimeContext ctx(p);
        Mat<IwasawaElement> rel(1, 1);
        rel.at(0, 0) = IwasawaElement(ctx.p());
        LambdaModule m = LambdaModule::make(ctx, 1, std::move(rel));
        HomologyProfile h = homology(m);
        auto exponent = euler_char_order_exponent(m);
        bool ok = h.h0 == ZpModuleShape::make(0, {1}) && h.h1.is_trivial() &&
                  exponent.has_value() && *exponent == 1;
        check.expect(ok, [&] { return "p=" + std::to_string(p); });
    }
    return std::move(check).take("exponent 1 with H0 = Z/p, H1 = 0 at p = 3, 5, 7");
}

// 7. pinned regression values for the twisted rank-one modules.
Outcome criterion_regressions() {
    Check check;
    PrimeContext five(5);
    Mat<IwasawaElement> rel(1, 1);
    rel.at(0, 0) = IwasawaElement::variable();
    LambdaModule line = LambdaModule::make(five, 1, std::move(rel));
    EigenModule twisted = EigenModule::make(GDescriptor::make(five, 1),
                                            std::map<long, LambdaModule>{{1, line}});
    check.expect(hmrank(twisted) == -1,
                 [&] { return "hmrank " + std::to_string(hmrank(twisted)); });
    HomologyProfile h = g_homology(twisted);
    check.expect(h.h0.is_trivial() && h.h1 == ZpModuleShape::free(1),
                 [&] { return "h0 " + h.h0.str() + " h1 " + h.h1.str(); });

    LambdaModule free1 = LambdaModule::make(five, 1, Mat<IwasawaElement>(1, 0));
    EigenModule isotypic = EigenModule::make(GDescriptor::make(five, 0),
                                             std::map<long, LambdaModule>{{1, free1}});
    check.expect(hmrank(isotypic) == 0 && gamma_rank(isotypic) == 1, [&] {
        return "hmrank " + std::to_string(hmrank(isotypic)) + " gamma_rank " +
               std::to_string(gamma_rank(isotypic));
    });
    return std::move(check).take("hmrank -1 and (hmrank 0, gamma_rank 1) pinned");
}

// 8. induction carries the subgroup rank; twisting reads the opposite
//    eigenspace.  200 instances each.
Outcome criterion_induce_twist() {
    Check check;
    Rng rng(kSeed + 5);
    for (long i = 0; i < 200; ++i) {
        PrimeContext ctx(i % 2 == 0 ? 5 : 7);
        long chars = mpz_class(ctx.p() - 1).get_si();
        GDescriptor g = GDescriptor::make(ctx, rng.range(0, chars - 1));
        LambdaModule n = random_injective_module(rng, ctx, CorpusOptions{4, 6, 2, 2, 4});
        check.expect(hmrank(induce(n, g)) == lambda_rank(n), [&] { return describe(n); });
    }
    for (long i = 0; i < 200; ++i) {
        PrimeContext ctx(i % 2 == 0 ? 5 : 7);
        GDescriptor g = GDescriptor::make(ctx, 0);
        long chars = g.character_count();
        EigenModule m = random_eigen_module(rng, g, CorpusOptions{3, 5, 2, 2, 3});
        long j = rng.range(0, chars - 1);
        long source = (chars - j) % chars;
        const LambdaModule* comp = m.component(source);
        long expected = comp ? lambda_rank(*comp) : 0;
        check.expect(hmrank(twist(m, j)) == expected, [&] {
            return "j=" + std::to_string(j) + "\n" +
                   serialize_document(document_from(m));
        });
    }
    return std::move(check).take("200 induced + 200 twisted instances exact");
}

// 9. conductor-11 worked example and the rank-growth evaluation.
Outcome criterion_conductor11() {
    Check check;
    PrimeContext five(5);
    IsogenyData d = IsogenyData::make(
        five, 4, 1, {{ArchKind::complex_place, 1}, {ArchKind::complex_place, 1}}, {{4, 1}});
    long delta = isogeny_mu_delta(d);
    check.expect(delta == 2 && delta * 2 == d.global_degree(),
                 [&] { return "delta_mu " + std::to_string(delta); });
    check.expect(theorem_k_hmrank(0, 4) == 4,
                 [&] { return "hmrank " + std::to_string(theorem_k_hmrank(0, 4)); });
    return std::move(check).take("delta_mu 2 = degree/2, hmrank(0, 4) = 4");
}

// 10. single-formula mu variation equals global minus local exponents on 500
//     random place-data instances.
Outcome criterion_isogeny_two_path() {
    Check check;
    Rng rng(kSeed + 6);
    const long total = 500;
    for (long i = 0; i < total; ++i) {
        PrimeContext ctx(i % 2 == 0 ? 5 : 7);
        IsogenyData d = random_isogeny_data(rng, ctx);
        long locals = 0;
        for (const auto& place : d.p_places()) locals += tate_local_exponent(place);
        bool ok = isogeny_mu_delta(d) == tate_global_exponent(d) - locals;
        check.expect(ok, [&] { return serialize_document(document_from(d)); });
    }
    return std::move(check).take(std::to_string(total) + " instances exact");
}

} // namespace

int main() {
    struct Criterion {
        const char* label;
        Outcome (*run)();
    };
    const std::vector<Criterion> criteria = {
        {"rank two-path equality (500 injective presentations, < 60 s)",
         criterion_rank_two_path},
        {"finite coinvariants imply torsion and finite invariants", criterion_nakayama},
        {"mod-p rank = p-torsion rank + rank (500 instances)", criterion_mod_p_split},
        {"restriction scales rank by the subgroup index (120 instances)",
         criterion_restriction},
        {"determinant mu matches the closed form (200 + 100 instances)",
         criterion_mu_oracle},
        {"chi exponent of the mod-p algebra is 1", criterion_chi_omega},
        {"pinned twisted-module regression values", criterion_regressions},
        {"induction and twist identities (200 instances each)", criterion_induce_twist},
        {"conductor-11 example: delta_mu = 2, hmrank(0, 4) = 4", criterion_conductor11},
        {"mu variation two-path identity (500 instances)", criterion_isogeny_two_path},
    };

    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome outcome = criteria[i].run();
        std::cout << "criterion " << (i + 1) << "/" << criteria.size() << ": "
                  << (outcome.pass ? "PASS" : "FAIL") << " " << criteria[i].label;
        if (!outcome.detail.empty()) {
            std::cout << (outcome.pass ? " [" : "\n  counterexample: ")
                      << outcome.detail << (outcome.pass ? "]" : "");
        }
        std::cout << "\n";
        if (!outcome.pass) ++failures;
    }
    if (failures == 0) {
        std::cout << "acceptance: all " << criteria.size() << " criteria hold\n";
    } else {
        std::cout << "acceptance: " << failures << " criteria FAILED\n";
    }
    return failures == 0 ? 0 : 1;
}
