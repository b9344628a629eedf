#include <doctest.h>

#include <functional>

#include "iwa/corpus.hpp"
#include "iwa/rank.hpp"
#include "iwa/weierstrass.hpp"
#include "iwa/zp_shape.hpp"

using namespace iwa;

namespace {

IwasawaElement P(std::initializer_list<long> coeffs) {
    std::vector<mpz_class> c;
    for (long x : coeffs) c.emplace_back(x);
    return IwasawaElement(std::move(c));
}

Mat<IwasawaElement> M(std::initializer_list<std::initializer_list<IwasawaElement>> rows) {
    std::vector<std::vector<IwasawaElement>> data;
    for (const auto& row : rows) data.emplace_back(row);
    return Mat<IwasawaElement>::from_rows(data);
}

Mat<mpz_class> Z(std::initializer_list<std::initializer_list<long>> rows) {
    std::vector<std::vector<mpz_class>> data;
    for (const auto& row : rows) {
        std::vector<mpz_class> r;
        for (long x : row) r.emplace_back(x);
        data.push_back(std::move(r));
    }
    return Mat<mpz_class>::from_rows(data);
}

} // namespace

TEST_CASE("prime context validates oddness and primality") {
    CHECK_NOTHROW(PrimeContext(3));
    CHECK_NOTHROW(PrimeContext(5));
    CHECK_NOTHROW(PrimeContext(104729));
    CHECK_THROWS_AS(PrimeContext(2), domain_error);
    CHECK_THROWS_AS(PrimeContext(1), domain_error);
    CHECK_THROWS_AS(PrimeContext(9), domain_error);
    CHECK_THROWS_AS(PrimeContext(-5), domain_error);
}

TEST_CASE("valp counts the exact power of p") {
    PrimeContext five(5);
    CHECK(valp(mpz_class(5), five) == 1);
    CHECK(valp(mpz_class(3), five) == 0);
    CHECK(valp(mpz_class(50), five) == 2);
    CHECK(valp(mpz_class(-125), five) == 3);
    CHECK_THROWS_AS(valp(mpz_class(0), five), domain_error);
}

TEST_CASE("iwasawa elements are canonical") {
    CHECK(IwasawaElement().is_zero());
    CHECK(IwasawaElement(std::vector<mpz_class>{0, 0}).is_zero());
    CHECK(P({0, 1}).degree() == 1);
    CHECK(P({1, 2, 0, 0}) == P({1, 2}));
    CHECK((P({0, 1}) * P({0, 1})) == P({0, 0, 1}));
    CHECK((P({1, 1}) - P({1})) == P({0, 1}));
}

TEST_CASE("content valuation") {
    PrimeContext five(5);
    CHECK(content_valuation(P({25, 5}), five) == 1);
    CHECK(content_valuation(P({3}), five) == 0);
    CHECK(!content_valuation(IwasawaElement(), five).has_value());
}

TEST_CASE("weierstrass preparation reads mu and lambda off the coefficients") {
    PrimeContext five(5);
    CHECK(weierstrass_prepare(P({3}), five) == WeierstrassData{0, 0, true});
    CHECK(weierstrass_prepare(P({25, 5}), five) == WeierstrassData{1, 1, false});
    CHECK(weierstrass_prepare(P({5, 0, 1}), five) == WeierstrassData{0, 2, false});
    CHECK_THROWS_AS(weierstrass_prepare(IwasawaElement(), five), domain_error);
}

TEST_CASE("weierstrass data is multiplicative") {
    Rng rng(11);
    for (int i = 0; i < 200; ++i) {
        PrimeContext ctx(i % 2 == 0 ? 3 : 5);
        IwasawaElement f = random_iwasawa_element(rng, ctx, 4, 2, true);
        IwasawaElement g = random_iwasawa_element(rng, ctx, 4, 2, true);
        WeierstrassData wf = weierstrass_prepare(f, ctx);
        WeierstrassData wg = weierstrass_prepare(g, ctx);
        WeierstrassData wfg = weierstrass_prepare(f * g, ctx);
        CHECK(wfg.mu == wf.mu + wg.mu);
        CHECK(wfg.lambda == wf.lambda + wg.lambda);
    }
}

TEST_CASE("rank over the rational function field") {
    PrimeContext five(5);
    IwasawaElement t = IwasawaElement::variable();
    IwasawaElement p(5);
    IwasawaElement zero;
    CHECK(rank_over_rational_functions(M({{t}})) == 1);
    CHECK(rank_over_rational_functions(M({{t, p}, {zero, zero}})) == 1);
    CHECK(rank_over_rational_functions(Mat<IwasawaElement>(2, 0)) == 0);
    CHECK(rank_over_rational_functions(Mat<IwasawaElement>(0, 0)) == 0);
    // dependent columns
    CHECK(rank_over_rational_functions(M({{t, t}})) == 1);
}

TEST_CASE("ragged rows are rejected") {
    std::vector<std::vector<IwasawaElement>> rows{{IwasawaElement(1)},
                                                  {IwasawaElement(1), IwasawaElement(2)}};
    CHECK_THROWS_AS(Mat<IwasawaElement>::from_rows(rows), format_error);
}

TEST_CASE("rank over F_p(T)") {
    PrimeContext five(5);
    CHECK(rank_over_fp_functions(M({{IwasawaElement(5)}}), five) == 0);
    CHECK(rank_over_fp_functions(M({{P({5, 1})}}), five) == 1);
    CHECK(rank_over_fp_functions(M({{IwasawaElement(1), IwasawaElement()},
                                    {IwasawaElement(), IwasawaElement(1)}}),
                                 five) == 2);
}

TEST_CASE("rank is invariant under permutations and row scaling") {
    Rng rng(23);
    for (int i = 0; i < 60; ++i) {
        PrimeContext ctx(5);
        LambdaModule m = random_injective_module(rng, ctx, CorpusOptions{4, 6, 2, 2, 4});
        Mat<IwasawaElement> a = m.relations();
        long before = rank_over_rational_functions(a);
        if (a.rows() >= 2) a.swap_rows(0, a.rows() - 1);
        if (a.cols() >= 2) a.swap_cols(0, a.cols() - 1);
        IwasawaElement scale = random_iwasawa_element(rng, ctx, 2, 1, true);
        for (std::size_t j = 0; j < a.cols(); ++j) a.at(0, j) = scale * a.at(0, j);
        CHECK(rank_over_rational_functions(a) == before);
    }
}

TEST_CASE("p-local cokernel shapes") {
    PrimeContext five(5);
    CHECK(snf_p_local(Z({{0}}), five) == ZpModuleShape::free(1));
    CHECK(snf_p_local(Z({{5}}), five) == ZpModuleShape::make(0, {1}));
    CHECK(snf_p_local(Z({{3}}), five) == ZpModuleShape::make(0, {}));
    CHECK(snf_p_local(Z({{50, 0}, {0, 3}}), five) == ZpModuleShape::make(0, {2}));
    // column map Z^1 -> Z^2
    CHECK(snf_p_local(Z({{5}, {0}}), five) == ZpModuleShape{1, {1}});
}

TEST_CASE("shape rendering") {
    CHECK(ZpModuleShape{}.str() == "0");
    CHECK(ZpModuleShape::free(2).str() == "Z_p^2");
    CHECK(ZpModuleShape::make(1, {3, 1}).str() == "Z_p + Z/p^3 + Z/p");
}

TEST_CASE("determinant via fraction-free elimination") {
    IwasawaElement t = IwasawaElement::variable();
    IwasawaElement p(5);
    CHECK(matrix_determinant(M({{p, IwasawaElement()}, {IwasawaElement(), t}})) == (p * t));
    CHECK(matrix_determinant(M({{t, t}, {t, t}})).is_zero());
    CHECK(matrix_determinant(Mat<IwasawaElement>(0, 0)) == IwasawaElement(1));
    CHECK_THROWS_AS(matrix_determinant(Mat<IwasawaElement>(1, 2)),
                    unsupported_presentation_error);
}

namespace {

// Test-only oracles by cofactor expansion and minor enumeration; they share
// no code with the elimination under test.
IwasawaElement cofactor_det(const Mat<IwasawaElement>& m) {
    const std::size_t n = m.rows();
    if (n == 0) return IwasawaElement(1);
    if (n == 1) return m.at(0, 0);
    IwasawaElement acc;
    for (std::size_t j = 0; j < n; ++j) {
        if (m.at(0, j).is_zero()) continue;
        Mat<IwasawaElement> sub(n - 1, n - 1);
        for (std::size_t r = 1; r < n; ++r) {
            std::size_t cc = 0;
            for (std::size_t c = 0; c < n; ++c) {
                if (c == j) continue;
                sub.at(r - 1, cc++) = m.at(r, c);
            }
        }
        IwasawaElement term = m.at(0, j) * cofactor_det(sub);
        acc = (j % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
}

void for_each_subset(std::size_t n, std::size_t k,
                     const std::function<void(const std::vector<std::size_t>&)>& fn,
                     std::vector<std::size_t>& acc, std::size_t start) {
    if (acc.size() == k) {
        fn(acc);
        return;
    }
    for (std::size_t i = start; i < n; ++i) {
        acc.push_back(i);
        for_each_subset(n, k, fn, acc, i + 1);
        acc.pop_back();
    }
}

void subsets(std::size_t n, std::size_t k,
             const std::function<void(const std::vector<std::size_t>&)>& fn) {
    std::vector<std::size_t> acc;
    for_each_subset(n, k, fn, acc, 0);
}

long minor_rank(const Mat<IwasawaElement>& m) {
    std::size_t bound = std::min(m.rows(), m.cols());
    for (std::size_t k = bound; k >= 1; --k) {
        bool found = false;
        subsets(m.rows(), k, [&](const std::vector<std::size_t>& rows) {
            if (found) return;
            subsets(m.cols(), k, [&](const std::vector<std::size_t>& cols) {
                if (found) return;
                Mat<IwasawaElement> sub(k, k);
                for (std::size_t r = 0; r < k; ++r)
                    for (std::size_t c = 0; c < k; ++c) sub.at(r, c) = m.at(rows[r], cols[c]);
                if (!cofactor_det(sub).is_zero()) found = true;
            });
        });
        if (found) return static_cast<long>(k);
    }
    return 0;
}

mpz_class int_cofactor_det(const Mat<mpz_class>& m) {
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    if (n == 1) return m.at(0, 0);
    mpz_class acc = 0;
    for (std::size_t j = 0; j < n; ++j) {
        if (m.at(0, j) == 0) continue;
        Mat<mpz_class> sub(n - 1, n - 1);
        for (std::size_t r = 1; r < n; ++r) {
            std::size_t cc = 0;
            for (std::size_t c = 0; c < n; ++c) {
                if (c == j) continue;
                sub.at(r - 1, cc++) = m.at(r, c);
            }
        }
        mpz_class term = m.at(0, j) * int_cofactor_det(sub);
        acc += (j % 2 == 0) ? term : -term;
    }
    return acc;
}

// Shape of the cokernel from gcds of k-minors: the k-th elementary divisor
// is gcd(k-minors) / gcd((k-1)-minors).
ZpModuleShape minor_gcd_shape(const Mat<mpz_class>& m, const PrimeContext& ctx) {
    std::size_t bound = std::min(m.rows(), m.cols());
    mpz_class prev = 1;
    long rank = 0;
    std::vector<long> exps;
    for (std::size_t k = 1; k <= bound; ++k) {
        mpz_class g = 0;
        subsets(m.rows(), k, [&](const std::vector<std::size_t>& rows) {
            subsets(m.cols(), k, [&](const std::vector<std::size_t>& cols) {
                Mat<mpz_class> sub(k, k);
                for (std::size_t r = 0; r < k; ++r)
                    for (std::size_t c = 0; c < k; ++c) sub.at(r, c) = m.at(rows[r], cols[c]);
                mpz_class d = int_cofactor_det(sub);
                mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
            });
        });
        if (g == 0) break;
        rank = static_cast<long>(k);
        long v = valp(g, ctx) - valp(prev, ctx);
        if (v > 0) exps.push_back(v);
        prev = g;
    }
    return ZpModuleShape::make(static_cast<long>(m.rows()) - rank, std::move(exps));
}

} // namespace

TEST_CASE("elimination rank agrees with the minor-enumeration oracle") {
    Rng rng(83);
    for (int i = 0; i < 120; ++i) {
        PrimeContext ctx(i % 2 == 0 ? 3 : 5);
        LambdaModule m = random_injective_module(rng, ctx, CorpusOptions{4, 4, 2, 1, 4});
        CHECK(rank_over_rational_functions(m.relations()) == minor_rank(m.relations()));
    }
}

TEST_CASE("p-local shape agrees with the minor-gcd oracle") {
    Rng rng(89);
    for (int i = 0; i < 150; ++i) {
        PrimeContext ctx(i % 2 == 0 ? 3 : 5);
        long rows = rng.range(1, 4), cols = rng.range(0, 4);
        Mat<mpz_class> b(static_cast<std::size_t>(rows), static_cast<std::size_t>(cols));
        for (std::size_t r = 0; r < b.rows(); ++r) {
            for (std::size_t c = 0; c < b.cols(); ++c) {
                mpz_class v(rng.range(-9, 9));
                long twist = rng.range(0, 3);
                for (long t = 1; t < twist; ++t) v *= ctx.p();
                b.at(r, c) = v;
            }
        }
        CHECK(snf_p_local(b, ctx) == minor_gcd_shape(b, ctx));
    }
}
