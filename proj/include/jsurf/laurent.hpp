#pragma once

#include <gmpxx.h>
#include <map>
#include <string>
#include <utility>

namespace jsurf {

/// Exact integer-coefficient Laurent polynomial in q = t^{1/4}.
///
/// Stored sparsely as q-exponent -> coefficient; zero coefficients are
/// never kept. Values are immutable in spirit: all arithmetic returns
/// fresh polynomials, so concurrent reads are safe.
class LaurentPolynomial {
public:
    using Terms = std::map<long, mpz_class>;

    LaurentPolynomial() = default;

    /// Constant polynomial.
    explicit LaurentPolynomial(const mpz_class& c);

    /// Monomial c * q^e.
    static LaurentPolynomial monomial(const mpz_class& c, long e);

    /// 1 (the empty-diagram bracket).
    static LaurentPolynomial one();

    /// delta = -q^2 - q^{-2}, the loop value of the Kauffman bracket.
    static LaurentPolynomial loop_value();

    bool is_zero() const { return terms_.empty(); }
    const Terms& terms() const { return terms_; }

    LaurentPolynomial operator+(const LaurentPolynomial& r) const;
    LaurentPolynomial operator-(const LaurentPolynomial& r) const;
    LaurentPolynomial operator*(const LaurentPolynomial& r) const;
    LaurentPolynomial operator-() const;
    bool operator==(const LaurentPolynomial& r) const { return terms_ == r.terms_; }

    LaurentPolynomial& operator+=(const LaurentPolynomial& r);
    LaurentPolynomial& operator*=(const LaurentPolynomial& r);

    /// Multiply by c * q^e in place.
    void shift_scale(const mpz_class& c, long e);

    /// p^n for n >= 0.
    LaurentPolynomial pow(unsigned n) const;

    long max_q_exponent() const;  // throws on zero polynomial
    long min_q_exponent() const;  // throws on zero polynomial

    /// (max degree, min degree) measured in powers of t = q^4.
    std::pair<mpq_class, mpq_class> degrees_t() const;

    /// Exact quotient; throws if the division leaves a remainder.
    LaurentPolynomial divide_exact(const LaurentPolynomial& divisor) const;

    /// "c_k*q^k + ..." sorted by exponent descending; "0" for zero.
    std::string to_string() const;

    /// JSON array of [exponent, coefficient-string] pairs, descending.
    std::string to_json() const;

private:
    void insert_term(long e, const mpz_class& c);

    Terms terms_;
};

}  // namespace jsurf
