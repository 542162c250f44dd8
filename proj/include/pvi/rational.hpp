#pragma once

#include <gmpxx.h>
#include <complex>
#include <stdexcept>
#include <string>

namespace pvi {

// Exact arbitrary-precision rational. GMP keeps the canonical form
// (coprime, positive denominator) for us.
using Rational = mpq_class;
using Integer = mpz_class;
using Complex = std::complex<double>;

struct math_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct division_by_zero : math_error {
    using math_error::math_error;
};
struct pole_error : math_error {
    using math_error::math_error;
};
struct degenerate_parameterization : math_error {
    using math_error::math_error;
};
struct riccati_condition : math_error {
    using math_error::math_error;
};
struct singular_system : math_error {
    using math_error::math_error;
};

inline Rational make_rational(const Integer &num, const Integer &den) {
    if (den == 0) throw division_by_zero("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline Rational make_rational(long num, long den = 1) {
    return make_rational(Integer(num), Integer(den));
}

// Parses "p/q" or "p"; q must be nonzero.
Rational rational_from_string(const std::string &s);

// "p/q" with the "/q" omitted for integers.
std::string rational_to_string(const Rational &q);

inline double to_double(const Rational &q) { return q.get_d(); }
inline Complex to_complex(const Rational &q) { return Complex(q.get_d(), 0.0); }

} // namespace pvi
