#ifndef IWA_POLY_HPP
#define IWA_POLY_HPP

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <vector>

#include "iwa/errors.hpp"
#include "iwa/prime.hpp"

namespace iwa {

// Element of the Iwasawa algebra of a one-dimensional group, held as an exact
// integer polynomial in the variable T.  Canonical form: ascending
// coefficients with no trailing zero; the zero element is the empty list.
class IwasawaElement {
public:
    IwasawaElement() = default;
    explicit IwasawaElement(long constant);
    explicit IwasawaElement(mpz_class constant);
    explicit IwasawaElement(std::vector<mpz_class> coefficients);

    // coefficient * T^power
    static IwasawaElement monomial(mpz_class coefficient, std::size_t power);
    static IwasawaElement variable() { return monomial(1, 1); }

    bool is_zero() const { return c_.empty(); }
    // Degree of the zero element is -1 by convention.
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    mpz_class coeff(std::size_t i) const { return i < c_.size() ? c_[i] : mpz_class(0); }
    const std::vector<mpz_class>& coefficients() const { return c_; }
    mpz_class constant_term() const { return coeff(0); }

    IwasawaElement operator-() const;
    IwasawaElement operator+(const IwasawaElement& rhs) const;
    IwasawaElement operator-(const IwasawaElement& rhs) const;
    IwasawaElement operator*(const IwasawaElement& rhs) const;

    bool operator==(const IwasawaElement& rhs) const { return c_ == rhs.c_; }
    bool operator!=(const IwasawaElement& rhs) const { return c_ != rhs.c_; }

    std::string str() const;

private:
    void trim();
    std::vector<mpz_class> c_;
};

// Exact quotient a / b for b | a in Z[T].  Internal building block of the
// fraction-free elimination; divisibility is guaranteed there by construction.
IwasawaElement divexact(const IwasawaElement& a, const IwasawaElement& b);

// Polynomial over F_p, coefficients reduced into [0, p).  The modulus is not
// stored; operations take the context explicitly.
struct FpPoly {
    std::vector<mpz_class> c;

    bool is_zero() const { return c.empty(); }
    long degree() const { return static_cast<long>(c.size()) - 1; }
    mpz_class coeff(std::size_t i) const { return i < c.size() ? c[i] : mpz_class(0); }

    bool operator==(const FpPoly& rhs) const { return c == rhs.c; }
    bool operator!=(const FpPoly& rhs) const { return c != rhs.c; }

    std::string str() const;
};

FpPoly fp_reduce(const IwasawaElement& f, const PrimeContext& ctx);
FpPoly fp_reduce(std::vector<mpz_class> coefficients, const PrimeContext& ctx);
FpPoly fp_add(const FpPoly& a, const FpPoly& b, const PrimeContext& ctx);
FpPoly fp_sub(const FpPoly& a, const FpPoly& b, const PrimeContext& ctx);
FpPoly fp_mul(const FpPoly& a, const FpPoly& b, const PrimeContext& ctx);
// Exact quotient in F_p[T] (b | a required).
FpPoly fp_divexact(const FpPoly& a, const FpPoly& b, const PrimeContext& ctx);

} // namespace iwa

#endif // IWA_POLY_HPP
