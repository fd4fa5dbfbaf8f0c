#pragma once

// Integer polynomials in one variable, stored as ascending coefficient
// vectors with a nonzero leading coefficient (the zero polynomial is the
// empty vector, degree -1).

#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "hmp/bigint.hpp"
#include "hmp/matrix.hpp"

namespace hmp {

class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<Int> coeffs);
    IntPolynomial(std::initializer_list<long> coeffs);

    static IntPolynomial monomial(const Int& c, std::size_t n);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<Int>& coeffs() const { return c_; }
    // Coefficient of x^i (zero beyond the degree).
    Int coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Int(0); }
    Int leading() const;

    Int eval(const Int& x) const;
    Rat eval(const Rat& x) const;

    IntPolynomial operator+(const IntPolynomial& o) const;
    IntPolynomial operator-(const IntPolynomial& o) const;
    IntPolynomial operator*(const IntPolynomial& o) const;
    IntPolynomial operator-() const;
    IntPolynomial scaled(const Int& c) const;

    bool operator==(const IntPolynomial&) const = default;

    IntPolynomial derivative() const;
    // x^deg * p(1/x): the coefficient vector reversed (then trimmed).
    IntPolynomial reversed() const;
    // Largest v with x^v | p, and p / x^v. Zero polynomial yields v = 0.
    std::pair<unsigned, IntPolynomial> strip_zero_roots() const;

    Int content() const;               // gcd of coefficients, >= 0
    IntPolynomial primitive_part() const;  // content 1, positive leading coeff

    std::string str() const;

private:
    std::vector<Int> c_;
    void trim();
};

// Quotient when den divides num exactly in Z[x]; nullopt otherwise.
std::optional<IntPolynomial> try_divide_exact(const IntPolynomial& num,
                                              const IntPolynomial& den);

// Primitive gcd over Z with positive leading coefficient (primitive
// pseudo-remainder sequence). poly_gcd(0, 0) = 0.
IntPolynomial poly_gcd(const IntPolynomial& a, const IntPolynomial& b);

// d-th cyclotomic polynomial (d >= 1), by exact division of x^d - 1.
IntPolynomial cyclotomic(unsigned long d);

// Characteristic polynomial det(xI - M), monic, exact integer coefficients.
IntPolynomial char_poly(const IntMatrix& m);

}  // namespace hmp
