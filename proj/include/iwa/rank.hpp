#ifndef IWA_RANK_HPP
#define IWA_RANK_HPP

#include <cstddef>
#include <optional>

#include "iwa/matrix.hpp"
#include "iwa/poly.hpp"
#include "iwa/prime.hpp"

namespace iwa {

/*
 * Fraction-free (Bareiss) elimination over an exact integral domain.  After
 * step k every entry of the remaining submatrix is a (k+1)-minor of the
 * permuted input, so the division by the previous pivot is exact; rank is the
 * number of pivot steps and the final pivot of a full square elimination is
 * the determinant up to the sign of the row/column permutations.
 *
 * Pivot choice: lowest weight (total degree), ties broken by lowest
 * (row, column) in scan order.  Deterministic by construction.
 */
template <class Ring>
long bareiss_rank(Mat<typename Ring::Elem> m, const Ring& ring) {
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    typename Ring::Elem prev = ring.one();
    std::size_t k = 0;
    while (k < rows && k < cols) {
        std::optional<std::pair<std::size_t, std::size_t>> pivot;
        long best = 0;
        for (std::size_t i = k; i < rows; ++i) {
            for (std::size_t j = k; j < cols; ++j) {
                if (ring.is_zero(m.at(i, j))) continue;
                long w = ring.weight(m.at(i, j));
                if (!pivot || w < best) {
                    pivot = {i, j};
                    best = w;
                }
            }
        }
        if (!pivot) break;
        m.swap_rows(k, pivot->first);
        m.swap_cols(k, pivot->second);
        for (std::size_t i = k + 1; i < rows; ++i) {
            for (std::size_t j = k + 1; j < cols; ++j) {
                m.at(i, j) = ring.divexact(
                    ring.sub(ring.mul(m.at(i, j), m.at(k, k)), ring.mul(m.at(i, k), m.at(k, j))),
                    prev);
            }
            m.at(i, k) = typename Ring::Elem{};
        }
        prev = m.at(k, k);
        ++k;
    }
    return static_cast<long>(k);
}

template <class Ring>
typename Ring::Elem bareiss_determinant(Mat<typename Ring::Elem> m, const Ring& ring) {
    if (m.rows() != m.cols()) {
        throw unsupported_presentation_error("determinant requires a square matrix");
    }
    const std::size_t n = m.rows();
    if (n == 0) return ring.one();
    typename Ring::Elem prev = ring.one();
    bool negate = false;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        std::optional<std::pair<std::size_t, std::size_t>> pivot;
        long best = 0;
        for (std::size_t i = k; i < n; ++i) {
            for (std::size_t j = k; j < n; ++j) {
                if (ring.is_zero(m.at(i, j))) continue;
                long w = ring.weight(m.at(i, j));
                if (!pivot || w < best) {
                    pivot = {i, j};
                    best = w;
                }
            }
        }
        if (!pivot) return typename Ring::Elem{};
        if (pivot->first != k) negate = !negate;
        if (pivot->second != k) negate = !negate;
        m.swap_rows(k, pivot->first);
        m.swap_cols(k, pivot->second);
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                m.at(i, j) = ring.divexact(
                    ring.sub(ring.mul(m.at(i, j), m.at(k, k)), ring.mul(m.at(i, k), m.at(k, j))),
                    prev);
            }
            m.at(i, k) = typename Ring::Elem{};
        }
        prev = m.at(k, k);
    }
    typename Ring::Elem det = m.at(n - 1, n - 1);
    return negate ? ring.neg(det) : det;
}

struct IntPolyRing {
    using Elem = IwasawaElement;
    Elem one() const { return Elem(1); }
    bool is_zero(const Elem& e) const { return e.is_zero(); }
    long weight(const Elem& e) const { return e.degree(); }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem neg(const Elem& a) const { return -a; }
    Elem divexact(const Elem& a, const Elem& b) const { return iwa::divexact(a, b); }
};

struct FpPolyRing {
    const PrimeContext& ctx;
    using Elem = FpPoly;
    Elem one() const { return FpPoly{{mpz_class(1)}}; }
    bool is_zero(const Elem& e) const { return e.is_zero(); }
    long weight(const Elem& e) const { return e.degree(); }
    Elem mul(const Elem& a, const Elem& b) const { return fp_mul(a, b, ctx); }
    Elem sub(const Elem& a, const Elem& b) const { return fp_sub(a, b, ctx); }
    Elem neg(const Elem& a) const { return fp_sub(FpPoly{}, a, ctx); }
    Elem divexact(const Elem& a, const Elem& b) const { return fp_divexact(a, b, ctx); }
};

// Exact rank over the rational-function field Q(T).
long rank_over_rational_functions(const Mat<IwasawaElement>& a);

// Exact rank over F_p(T); entries are reduced mod p first.
long rank_over_fp_functions(const Mat<IwasawaElement>& a, const PrimeContext& ctx);
long fp_matrix_rank(const Mat<FpPoly>& a, const PrimeContext& ctx);

// Rank of a scalar matrix over F_p (coefficients reduced mod p).
long fp_scalar_rank(const Mat<mpz_class>& a, const PrimeContext& ctx);

IwasawaElement matrix_determinant(const Mat<IwasawaElement>& a);

} // namespace iwa

#endif // IWA_RANK_HPP
