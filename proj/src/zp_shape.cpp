#include "iwa/zp_shape.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <optional>
#include <sstream>

#include "iwa/errors.hpp"

namespace iwa {

long ZpModuleShape::torsion_length() const {
    return std::accumulate(torsion_exponents.begin(), torsion_exponents.end(), 0L);
}

ZpModuleShape ZpModuleShape::make(long free_rank, std::vector<long> exponents) {
    if (free_rank < 0) throw domain_error("module shape: negative free rank");
    for (long e : exponents) {
        if (e <= 0) throw domain_error("module shape: torsion exponents must be positive");
    }
    std::sort(exponents.begin(), exponents.end(), std::greater<long>());
    return ZpModuleShape{free_rank, std::move(exponents)};
}

ZpModuleShape ZpModuleShape::operator+(const ZpModuleShape& rhs) const {
    std::vector<long> exps = torsion_exponents;
    exps.insert(exps.end(), rhs.torsion_exponents.begin(), rhs.torsion_exponents.end());
    return make(free_rank + rhs.free_rank, std::move(exps));
}

std::string ZpModuleShape::str() const {
    if (is_trivial()) return "0";
    std::ostringstream out;
    bool first = true;
    if (free_rank > 0) {
        out << "Z_p";
        if (free_rank > 1) out << "^" << free_rank;
        first = false;
    }
    for (long e : torsion_exponents) {
        if (!first) out << " + ";
        out << "Z/p";
        if (e > 1) out << "^" << e;
        first = false;
    }
    return out.str();
}

namespace {

mpz_class abs_val(const mpz_class& a) { return a < 0 ? mpz_class(-a) : a; }

struct Pivot {
    std::size_t row;
    std::size_t col;
    long valuation;
};

// Least p-valuation in the trailing submatrix, ties by smaller absolute
// value then scan order.
std::optional<Pivot> find_pivot(const Mat<mpz_class>& m, std::size_t k,
                                const PrimeContext& ctx) {
    std::optional<Pivot> best;
    mpz_class best_abs;
    for (std::size_t i = k; i < m.rows(); ++i) {
        for (std::size_t j = k; j < m.cols(); ++j) {
            if (m.at(i, j) == 0) continue;
            long v = valp(m.at(i, j), ctx);
            mpz_class a = abs_val(m.at(i, j));
            if (!best || v < best->valuation || (v == best->valuation && a < best_abs)) {
                best = Pivot{i, j, v};
                best_abs = a;
            }
        }
    }
    return best;
}

} // namespace

std::vector<long> p_local_divisor_valuations(Mat<mpz_class> m, const PrimeContext& ctx) {
    std::vector<long> valuations;
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    std::size_t k = 0;
    while (k < rows && k < cols) {
        auto pivot = find_pivot(m, k, ctx);
        if (!pivot) break;
        m.swap_rows(k, pivot->row);
        m.swap_cols(k, pivot->col);
        const long v = pivot->valuation;
        mpz_class p_pow;
        mpz_pow_ui(p_pow.get_mpz_t(), ctx.p().get_mpz_t(), static_cast<unsigned long>(v));
        mpz_class unit;  // pivot = p^v * unit with unit prime to p
        mpz_divexact(unit.get_mpz_t(), m.at(k, k).get_mpz_t(), p_pow.get_mpz_t());
        // Every remaining entry has valuation >= v, so u*row_i - c*row_k
        // clears the column in one pass; scaling by the unit u leaves the
        // p-local cokernel unchanged.
        for (std::size_t i = k + 1; i < rows; ++i) {
            if (m.at(i, k) == 0) continue;
            mpz_class c;
            mpz_divexact(c.get_mpz_t(), m.at(i, k).get_mpz_t(), p_pow.get_mpz_t());
            for (std::size_t j = k; j < cols; ++j) {
                m.at(i, j) = unit * m.at(i, j) - c * m.at(k, j);
            }
        }
        for (std::size_t j = k + 1; j < cols; ++j) {
            if (m.at(k, j) == 0) continue;
            mpz_class c;
            mpz_divexact(c.get_mpz_t(), m.at(k, j).get_mpz_t(), p_pow.get_mpz_t());
            for (std::size_t i = k; i < rows; ++i) {
                m.at(i, j) = unit * m.at(i, j) - c * m.at(i, k);
            }
        }
        valuations.push_back(v);
        ++k;
    }
    return valuations;
}

ZpModuleShape snf_p_local(const Mat<mpz_class>& b, const PrimeContext& ctx) {
    std::vector<long> valuations = p_local_divisor_valuations(b, ctx);
    long free_rank = static_cast<long>(b.rows()) - static_cast<long>(valuations.size());
    std::vector<long> exps;
    for (long v : valuations) {
        if (v > 0) exps.push_back(v);
    }
    return ZpModuleShape::make(free_rank, std::move(exps));
}

} // namespace iwa
