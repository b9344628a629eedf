#include "iwa/rank.hpp"

namespace iwa {

long rank_over_rational_functions(const Mat<IwasawaElement>& a) {
    return bareiss_rank(a, IntPolyRing{});
}

long rank_over_fp_functions(const Mat<IwasawaElement>& a, const PrimeContext& ctx) {
    Mat<FpPoly> reduced(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            reduced.at(i, j) = fp_reduce(a.at(i, j), ctx);
        }
    }
    return fp_matrix_rank(reduced, ctx);
}

long fp_matrix_rank(const Mat<FpPoly>& a, const PrimeContext& ctx) {
    return bareiss_rank(a, FpPolyRing{ctx});
}

namespace {

// F_p seen as a one-element-per-scalar ring; division is by modular inverse.
struct FpScalarRing {
    const PrimeContext& ctx;
    using Elem = mpz_class;
    Elem one() const { return mpz_class(1); }
    Elem reduce(const Elem& a) const {
        mpz_class r;
        mpz_mod(r.get_mpz_t(), a.get_mpz_t(), ctx.p().get_mpz_t());
        return r;
    }
    bool is_zero(const Elem& e) const { return reduce(e) == 0; }
    long weight(const Elem&) const { return 0; }
    Elem mul(const Elem& a, const Elem& b) const { return reduce(a * b); }
    Elem sub(const Elem& a, const Elem& b) const { return reduce(a - b); }
    Elem neg(const Elem& a) const { return reduce(-a); }
    Elem divexact(const Elem& a, const Elem& b) const {
        mpz_class inv;
        if (mpz_invert(inv.get_mpz_t(), b.get_mpz_t(), ctx.p().get_mpz_t()) == 0) {
            throw domain_error("fp_scalar_rank: non-invertible pivot");
        }
        return reduce(a * inv);
    }
};

} // namespace

long fp_scalar_rank(const Mat<mpz_class>& a, const PrimeContext& ctx) {
    FpScalarRing ring{ctx};
    Mat<mpz_class> reduced(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) reduced.at(i, j) = ring.reduce(a.at(i, j));
    }
    return bareiss_rank(reduced, ring);
}

IwasawaElement matrix_determinant(const Mat<IwasawaElement>& a) {
    return bareiss_determinant(a, IntPolyRing{});
}

} // namespace iwa
