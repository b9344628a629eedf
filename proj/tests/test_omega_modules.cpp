#include <doctest.h>

#include "iwa/corpus.hpp"
#include "iwa/elementary.hpp"
#include "iwa/omega_module.hpp"
#include "iwa/rank.hpp"

using namespace iwa;

namespace {

IwasawaElement P(std::initializer_list<long> coeffs) {
    std::vector<mpz_class> c;
    for (long x : coeffs) c.emplace_back(x);
    return IwasawaElement(std::move(c));
}

FpPoly F(std::initializer_list<long> coeffs, const PrimeContext& ctx) {
    return fp_reduce(P(coeffs), ctx);
}

const PrimeContext five(5);

OmegaModule omega_quotient(const PrimeContext& ctx, FpPoly g) {
    Mat<FpPoly> rel(1, 1);
    rel.at(0, 0) = std::move(g);
    return OmegaModule::make(ctx, 1, std::move(rel));
}

} // namespace

TEST_CASE("omega rank") {
    CHECK(omega_rank(OmegaModule::make(five, 1, Mat<FpPoly>(1, 0))) == 1);
    CHECK(omega_rank(omega_quotient(five, F({0, 1}, five))) == 0);
    Mat<FpPoly> rel(2, 1);
    rel.at(0, 0) = F({0, 1}, five);
    rel.at(1, 0) = F({1, 1}, five);
    CHECK(omega_rank(OmegaModule::make(five, 2, std::move(rel))) == 1);
}

TEST_CASE("omega euler rank via the T = 0 specialization") {
    CHECK(omega_euler_rank(OmegaModule::make(five, 1, Mat<FpPoly>(1, 0))) == 1);
    CHECK(omega_euler_rank(omega_quotient(five, F({0, 1}, five))) == 0);
    CHECK(omega_euler_rank(omega_quotient(five, F({1, 1}, five))) == 0);
    // zero relation column is not injective
    CHECK_THROWS_AS(omega_euler_rank(omega_quotient(five, FpPoly{})),
                    unsupported_presentation_error);
}

TEST_CASE("entries are reduced mod p at construction") {
    OmegaModule n = omega_quotient(five, FpPoly{{mpz_class(7), mpz_class(10)}});
    CHECK(n.relations().at(0, 0) == F({2}, five));
}

TEST_CASE("elementary invariants in closed form") {
    CHECK(elementary_invariants(ElementaryModule::make(five, 0, {2}, {})).mu == 2);

    ElementaryModule dist_only =
        ElementaryModule::make(five, 0, {}, {DistinguishedPart{P({5, 1}), 1}});
    CHECK(elementary_invariants(dist_only).mu == 0);

    ElementaryModule mixed = ElementaryModule::make(
        five, 1, {1}, {DistinguishedPart{P({5, 0, 1}), 1}});
    ElementaryInvariants inv = elementary_invariants(mixed);
    CHECK(inv.rank == 1);
    CHECK(inv.mu == 1);
    CHECK(inv.lambda == 2);
    CHECK(inv.homology.h0 == ZpModuleShape::make(1, {1, 1}));
    CHECK(inv.homology.h1.is_trivial());

    // non-monic and unit-constant-term polynomials are not distinguished
    CHECK_THROWS_AS(
        ElementaryModule::make(five, 0, {}, {DistinguishedPart{P({1, 1}), 1}}),
        domain_error);
    CHECK_THROWS_AS(
        ElementaryModule::make(five, 0, {}, {DistinguishedPart{P({5, 2}), 1}}),
        domain_error);
    CHECK_THROWS_AS(ElementaryModule::make(five, 0, {0}, {}), domain_error);
}

TEST_CASE("diagonal presentations of the normal form") {
    LambdaModule p_only = to_presentation(ElementaryModule::make(five, 0, {1}, {}));
    CHECK(p_only.generators() == 1);
    CHECK(p_only.relations().at(0, 0) == P({5}));

    LambdaModule diag = to_presentation(
        ElementaryModule::make(five, 0, {1}, {DistinguishedPart{P({0, 1}), 1}}));
    CHECK(diag.generators() == 2);
    CHECK(diag.relations().at(0, 0) == P({5}));
    CHECK(diag.relations().at(1, 1) == P({0, 1}));
    CHECK(diag.relations().at(0, 1).is_zero());

    LambdaModule with_free = to_presentation(ElementaryModule::make(five, 1, {1}, {}));
    CHECK(with_free.generators() == 2);
    CHECK(with_free.relation_count() == 1);
    CHECK(with_free.relations().at(0, 0).is_zero());
    CHECK(with_free.relations().at(1, 0) == P({5}));
}

TEST_CASE("cyclic modules with a nonzero annihilator have rank zero") {
    CHECK(cyclic_annihilated_rank(F({0, 1}, five), five) == 0);
    CHECK(cyclic_annihilated_rank(F({1, 1}, five), five) == 0);
    CHECK(cyclic_annihilated_rank(F({0, 1, 0, 1}, five), five) == 0);
    CHECK_THROWS_AS(cyclic_annihilated_rank(FpPoly{}, five), domain_error);
}

TEST_CASE("closed forms agree with the presentation route") {
    Rng rng(41);
    for (int i = 0; i < 80; ++i) {
        PrimeContext ctx(i % 2 == 0 ? 3 : 5);
        ElementaryModule e = random_elementary_module(rng, ctx, i % 3 != 0);
        ElementaryInvariants closed = elementary_invariants(e);
        LambdaModule pres = to_presentation(e);
        CHECK(lambda_rank(pres) == closed.rank);
        CHECK(homology(pres) == closed.homology);
        if (e.is_torsion()) {
            WeierstrassData w = char_invariants(pres);
            CHECK(w.mu == closed.mu);
            CHECK(w.lambda == closed.lambda);
        } else {
            CHECK_THROWS_AS(char_invariants(pres), unsupported_presentation_error);
        }
    }
}

TEST_CASE("chi exponent of the mod-p algebra is one") {
    for (long p : {3L, 5L, 7L}) {
        PrimeContext ctx(p);
        Mat<IwasawaElement> rel(1, 1);
        rel.at(0, 0) = IwasawaElement(ctx.p());
        LambdaModule m = LambdaModule::make(ctx, 1, std::move(rel));
        HomologyProfile h = homology(m);
        CHECK(h.h0 == ZpModuleShape::make(0, {1}));
        CHECK(h.h1.is_trivial());
        CHECK(euler_char_order_exponent(m) == 1);
    }
}

TEST_CASE("mu equals the chi order exponent on p-torsion modules") {
    Rng rng(43);
    for (int i = 0; i < 60; ++i) {
        PrimeContext ctx(i % 2 == 0 ? 3 : 7);
        ElementaryModule e = random_elementary_module(rng, ctx, true, true);
        auto exponent = euler_char_order_exponent(to_presentation(e));
        REQUIRE(exponent.has_value());
        CHECK(*exponent == elementary_invariants(e).mu);
    }
}

TEST_CASE("mu adds along block-triangular torsion extensions") {
    Rng rng(47);
    for (int i = 0; i < 60; ++i) {
        PrimeContext ctx(5);
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
                b.at(r, c) = pa.relations().at(r, c);
        for (long r = 0; r < nc; ++r)
            for (long c = 0; c < nc; ++c)
                b.at(na + r, na + c) = pc.relations().at(r, c);
        for (long r = 0; r < nc; ++r)
            for (long c = 0; c < na; ++c)
                b.at(na + r, c) = random_iwasawa_element(rng, ctx, 2, 1, false);
        LambdaModule ext = LambdaModule::make(ctx, na + nc, std::move(b));
        CHECK(char_invariants(ext).mu ==
              elementary_invariants(ea).mu + elementary_invariants(ec).mu);
    }
}
