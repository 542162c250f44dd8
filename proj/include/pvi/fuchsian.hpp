#pragma once

#include "pvi/linalg.hpp"
#include "pvi/pvi_core.hpp"

#include <array>

namespace pvi {

template <class S>
S from_rational(const Rational &q) {
    if constexpr (std::is_same_v<S, Rational>) return q;
    else return to_complex(q);
}

// Spectral data of the rank-3 systems: lambda_i = Tr(B_i) and mu_i the
// eigenvalues of B1+B2+B3; the traces force sum(lambda) = sum(mu).
struct SpectralData3 {
    std::array<Rational, 3> lambda;
    std::array<Rational, 3> mu;

    SpectralData3(std::array<Rational, 3> l, std::array<Rational, 3> m)
        : lambda(std::move(l)), mu(std::move(m)) {
        if (lambda[0] + lambda[1] + lambda[2] != mu[0] + mu[1] + mu[2])
            throw math_error("spectral data violates sum(lambda) = sum(mu)");
    }
    bool mu_distinct() const {
        return mu[0] != mu[1] && mu[0] != mu[2] && mu[1] != mu[2];
    }
};

// Rank-3 Fuchsian system: three rank-one residues at poles (0, t, 1).
template <class S>
struct Fuchsian3 {
    SquareMatrix<S> B1, B2, B3;
    S t;
    SpectralData3 spectral;

    std::array<const SquareMatrix<S> *, 3> residues() const { return {&B1, &B2, &B3}; }
    SquareMatrix<S> residue_sum() const { return B1 + B2 + B3; }
};

using Fuchsian3Q = Fuchsian3<Rational>;
using Fuchsian3C = Fuchsian3<Complex>;

// Rank-2 system with traceless residues, eigenvalues +-theta_i/2; stored
// normalized so that A4 = -(A1+A2+A3) = diag(theta4, -theta4)/2.
template <class S>
struct Fuchsian2 {
    SquareMatrix<S> A1, A2, A3;
    S t;
    ThetaVector theta;

    SquareMatrix<S> a4() const { return -(A1 + A2 + A3); }
};

using Fuchsian2Q = Fuchsian2<Rational>;
using Fuchsian2C = Fuchsian2<Complex>;

Fuchsian3C to_complex(const Fuchsian3Q &sys);
Fuchsian2C to_complex(const Fuchsian2Q &sys);

// PVI parameters read off the spectral data for the branch labelled by a
// permutation (i,j,k) of (1,2,3):
//   theta = (l1 - mu_i, l2 - mu_i, l3 - mu_i, mu_k - mu_j).
ThetaVector theta_from_spectral(const SpectralData3 &sp, int i, int j, int k);

// Residues with nonzero entries confined to one row each, from the
// explicit entry formulas.
template <class S>
Fuchsian3<S> build_simple(const S &x, const S &y, const S &t, const SpectralData3 &sp);

// The z/u/w/c parameterization: rank-one residues with B1+B2+B3 equal to
// diag(mu) on the nose. Solves the six defining equations plus the linear
// system for the c_i.
template <class S>
struct FullParameterization {
    std::array<S, 3> z, u, w, c;
    Fuchsian3<S> system;
};

template <class S>
FullParameterization<S> build_full_parameterization(const S &x, const S &y, const S &t,
                                                    const SpectralData3 &sp);

template <class S>
Fuchsian3<S> build_full(const S &x, const S &y, const S &t, const SpectralData3 &sp) {
    return build_full_parameterization<S>(x, y, t, sp).system;
}

// Conjugates the system so that B1+B2+B3 = diag(mu1, mu2, mu3); exact over
// the rationals (eigenvectors from adjugate columns).
template <class S>
Fuchsian3<S> normalize_residue_sum(const Fuchsian3<S> &sys, double tol = 1e-9);

// Position of the unique zero of the (j,k) entry (1-based) of
// z(z-1)(z-t) Bhat(z), after normalization. Degree-one entry required.
template <class S>
S extract_y(const Fuchsian3<S> &sys, int j, int k, double tol = 1e-9);

// Root of the top-right entry for a normalized 2x2 system.
template <class S>
S extract_y_2x2(const Fuchsian2<S> &sys, double tol = 1e-9);

// x = ((mu1 - mu3)/mu3) * Bhat_33(y) in the normalized frame.
template <class S>
S recover_x(const Fuchsian3<S> &sys, const S &y, double tol = 1e-9);

// companion formula x = ((mu3 - mu1)/mu1) * Bhat_11(y + delta/x)
template <class S>
S recover_x_via_b11(const Fuchsian3<S> &sys, const S &y_shifted, double tol = 1e-9);

// Conjugation by a permutation matrix; mu is relabelled accordingly and
// entry (j,k) moves to (perm(j), perm(k)).
template <class S>
Fuchsian3<S> permute_mu(const Fuchsian3<S> &sys, const std::array<int, 3> &perm);

// Embeds a 2x2 system as the bottom-right block of a rank-3 system with
// mu1 = 0; the residues are twisted by theta_i/2 to make them rank one.
template <class S>
Fuchsian3<S> embed_2x2(const Fuchsian2<S> &sys);

// Inverse of embed_2x2 for systems with mu1 = 0 and zero first column.
template <class S>
Fuchsian2<S> restrict_to_2x2(const Fuchsian3<S> &sys, double tol = 1e-9);

// The isomonodromic family with Klein reflection group monodromy:
// lambda_i = 1/2, mu = (3,5,13)/14, explicit entries b_ij(s). Defined for
// rational s other than 0 and 1.
Fuchsian3Q klein_family(const Rational &s);

// The corresponding algebraic PVI solution (7 branches, genus zero,
// theta = (2,2,2,4)/7).
SolutionCurve klein_curve();

SpectralData3 klein_spectral();

// trace invariants (Tr B_i B_j for i<j and Tr B1 B2 B3), conjugation
// invariant, used to compare systems up to gauge
template <class S>
std::array<S, 4> trace_invariants(const Fuchsian3<S> &sys) {
    return {(sys.B1 * sys.B2).trace(), (sys.B1 * sys.B3).trace(),
            (sys.B2 * sys.B3).trace(), (sys.B1 * sys.B2 * sys.B3).trace()};
}

} // namespace pvi
