#pragma once

#include "pvi/rational.hpp"

#include <initializer_list>
#include <vector>

namespace pvi {

// Univariate polynomial over Q, coefficients ascending, no trailing zeros.
// The zero polynomial has an empty coefficient vector.
class PolynomialQ {
public:
    PolynomialQ() = default;
    PolynomialQ(std::initializer_list<Rational> coeffs)
        : coeffs_(coeffs) { trim(); }
    explicit PolynomialQ(std::vector<Rational> coeffs)
        : coeffs_(std::move(coeffs)) { trim(); }
    explicit PolynomialQ(const Rational &c) : coeffs_{c} { trim(); }

    static PolynomialQ variable();                  // s
    static PolynomialQ monomial(int deg, const Rational &c);

    bool is_zero() const { return coeffs_.empty(); }
    // degree of the zero polynomial is -1 by convention
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<Rational> &coefficients() const { return coeffs_; }
    Rational coefficient(int k) const;
    Rational leading_coefficient() const;

    PolynomialQ operator-() const;
    PolynomialQ operator+(const PolynomialQ &o) const;
    PolynomialQ operator-(const PolynomialQ &o) const;
    PolynomialQ operator*(const PolynomialQ &o) const;
    PolynomialQ operator*(const Rational &c) const;
    bool operator==(const PolynomialQ &o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const PolynomialQ &o) const { return !(*this == o); }

    // quotient and remainder; divisor must be nonzero
    static std::pair<PolynomialQ, PolynomialQ> divmod(const PolynomialQ &a,
                                                      const PolynomialQ &b);

    PolynomialQ derivative() const;
    PolynomialQ make_monic() const;

    Rational evaluate(const Rational &s0) const;
    Complex evaluate(const Complex &s0) const;

private:
    void trim();
    std::vector<Rational> coeffs_;
};

// Exact gcd, returned monic (gcd of two zero polynomials is zero).
PolynomialQ poly_gcd(const PolynomialQ &a, const PolynomialQ &b);

} // namespace pvi
