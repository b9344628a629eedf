#include "iwa/poly.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace iwa {

IwasawaElement::IwasawaElement(long constant) {
    if (constant != 0) c_.emplace_back(constant);
}

IwasawaElement::IwasawaElement(mpz_class constant) {
    if (constant != 0) c_.push_back(std::move(constant));
}

IwasawaElement::IwasawaElement(std::vector<mpz_class> coefficients) : c_(std::move(coefficients)) {
    trim();
}

IwasawaElement IwasawaElement::monomial(mpz_class coefficient, std::size_t power) {
    if (coefficient == 0) return IwasawaElement();
    std::vector<mpz_class> c(power + 1, mpz_class(0));
    c[power] = std::move(coefficient);
    return IwasawaElement(std::move(c));
}

void IwasawaElement::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IwasawaElement IwasawaElement::operator-() const {
    std::vector<mpz_class> out(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) out[i] = -c_[i];
    return IwasawaElement(std::move(out));
}

IwasawaElement IwasawaElement::operator+(const IwasawaElement& rhs) const {
    std::vector<mpz_class> out(std::max(c_.size(), rhs.c_.size()), mpz_class(0));
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = coeff(i) + rhs.coeff(i);
    return IwasawaElement(std::move(out));
}

IwasawaElement IwasawaElement::operator-(const IwasawaElement& rhs) const {
    std::vector<mpz_class> out(std::max(c_.size(), rhs.c_.size()), mpz_class(0));
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = coeff(i) - rhs.coeff(i);
    return IwasawaElement(std::move(out));
}

IwasawaElement IwasawaElement::operator*(const IwasawaElement& rhs) const {
    if (is_zero() || rhs.is_zero()) return IwasawaElement();
    std::vector<mpz_class> out(c_.size() + rhs.c_.size() - 1, mpz_class(0));
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (std::size_t j = 0; j < rhs.c_.size(); ++j) {
            out[i + j] += c_[i] * rhs.c_[j];
        }
    }
    return IwasawaElement(std::move(out));
}

namespace {

std::string poly_str(const std::vector<mpz_class>& c) {
    if (c.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (c[i] == 0) continue;
        mpz_class a = c[i];
        if (first) {
            if (a < 0) { out << "-"; a = -a; }
        } else {
            out << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        if (i == 0 || a != 1) out << a.get_str();
        if (i > 0) {
            if (a != 1) out << "*";
            out << "T";
            if (i > 1) out << "^" << i;
        }
        first = false;
    }
    return out.str();
}

} // namespace

std::string IwasawaElement::str() const { return poly_str(c_); }

std::string FpPoly::str() const { return poly_str(c); }

IwasawaElement divexact(const IwasawaElement& a, const IwasawaElement& b) {
    if (b.is_zero()) throw domain_error("divexact: division by zero polynomial");
    if (a.is_zero()) return IwasawaElement();
    long da = a.degree();
    long db = b.degree();
    if (da < db) throw domain_error("divexact: quotient is not polynomial");
    std::vector<mpz_class> rem = a.coefficients();
    std::vector<mpz_class> quot(static_cast<std::size_t>(da - db) + 1, mpz_class(0));
    const mpz_class& lead = b.coeff(static_cast<std::size_t>(db));
    for (long k = da - db; k >= 0; --k) {
        mpz_class& top = rem[static_cast<std::size_t>(k + db)];
        if (top == 0) continue;
        mpz_class q, r;
        mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), top.get_mpz_t(), lead.get_mpz_t());
        if (r != 0) throw domain_error("divexact: inexact polynomial division");
        quot[static_cast<std::size_t>(k)] = q;
        for (long i = 0; i <= db; ++i) {
            rem[static_cast<std::size_t>(k + i)] -= q * b.coeff(static_cast<std::size_t>(i));
        }
    }
    for (const auto& r : rem) {
        if (r != 0) throw domain_error("divexact: inexact polynomial division");
    }
    return IwasawaElement(std::move(quot));
}

namespace {

mpz_class mod_p(const mpz_class& a, const PrimeContext& ctx) {
    mpz_class r;
    mpz_mod(r.get_mpz_t(), a.get_mpz_t(), ctx.p().get_mpz_t());
    return r;
}

FpPoly trim_fp(std::vector<mpz_class> c) {
    while (!c.empty() && c.back() == 0) c.pop_back();
    return FpPoly{std::move(c)};
}

} // namespace

FpPoly fp_reduce(std::vector<mpz_class> coefficients, const PrimeContext& ctx) {
    for (auto& a : coefficients) a = mod_p(a, ctx);
    return trim_fp(std::move(coefficients));
}

FpPoly fp_reduce(const IwasawaElement& f, const PrimeContext& ctx) {
    return fp_reduce(f.coefficients(), ctx);
}

FpPoly fp_add(const FpPoly& a, const FpPoly& b, const PrimeContext& ctx) {
    std::vector<mpz_class> out(std::max(a.c.size(), b.c.size()), mpz_class(0));
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = mod_p(a.coeff(i) + b.coeff(i), ctx);
    return trim_fp(std::move(out));
}

FpPoly fp_sub(const FpPoly& a, const FpPoly& b, const PrimeContext& ctx) {
    std::vector<mpz_class> out(std::max(a.c.size(), b.c.size()), mpz_class(0));
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = mod_p(a.coeff(i) - b.coeff(i), ctx);
    return trim_fp(std::move(out));
}

FpPoly fp_mul(const FpPoly& a, const FpPoly& b, const PrimeContext& ctx) {
    if (a.is_zero() || b.is_zero()) return FpPoly{};
    std::vector<mpz_class> out(a.c.size() + b.c.size() - 1, mpz_class(0));
    for (std::size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i] == 0) continue;
        for (std::size_t j = 0; j < b.c.size(); ++j) {
            out[i + j] += a.c[i] * b.c[j];
        }
    }
    for (auto& x : out) x = mod_p(x, ctx);
    return trim_fp(std::move(out));
}

FpPoly fp_divexact(const FpPoly& a, const FpPoly& b, const PrimeContext& ctx) {
    if (b.is_zero()) throw domain_error("fp_divexact: division by zero polynomial");
    if (a.is_zero()) return FpPoly{};
    long da = a.degree();
    long db = b.degree();
    if (da < db) throw domain_error("fp_divexact: quotient is not polynomial");
    mpz_class lead_inv;
    if (mpz_invert(lead_inv.get_mpz_t(), b.c.back().get_mpz_t(), ctx.p().get_mpz_t()) == 0) {
        throw domain_error("fp_divexact: leading coefficient not invertible");
    }
    std::vector<mpz_class> rem = a.c;
    std::vector<mpz_class> quot(static_cast<std::size_t>(da - db) + 1, mpz_class(0));
    for (long k = da - db; k >= 0; --k) {
        mpz_class top = mod_p(rem[static_cast<std::size_t>(k + db)], ctx);
        if (top == 0) continue;
        mpz_class q = mod_p(top * lead_inv, ctx);
        quot[static_cast<std::size_t>(k)] = q;
        for (long i = 0; i <= db; ++i) {
            auto& cell = rem[static_cast<std::size_t>(k + i)];
            cell = mod_p(cell - q * b.coeff(static_cast<std::size_t>(i)), ctx);
        }
    }
    for (const auto& r : rem) {
        if (mod_p(r, ctx) != 0) throw domain_error("fp_divexact: inexact division");
    }
    return trim_fp(std::move(quot));
}

} // namespace iwa
