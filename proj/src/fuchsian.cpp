#include "pvi/fuchsian.hpp"

namespace pvi {

namespace {

template <class S>
bool negligible(const S &v, double tol, double scale) {
    if constexpr (std::is_same_v<S, Rational>) {
        (void)tol;
        (void)scale;
        return v == 0;
    } else {
        return std::abs(v) <= tol * std::max(1.0, scale);
    }
}

template <class S>
double scale_of(const Fuchsian3<S> &sys) {
    if constexpr (std::is_same_v<S, Rational>) return 1.0;
    else
        return std::max({max_abs(sys.B1), max_abs(sys.B2), max_abs(sys.B3), 1.0});
}

template <class S>
SquareMatrix<S> outer(const std::array<S, 3> &col, const std::array<S, 3> &row) {
    SquareMatrix<S> m(3);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            m(i, j) = col[static_cast<size_t>(i)] * row[static_cast<size_t>(j)];
    return m;
}

// adjugate of a 3x3 matrix (transpose of the cofactor matrix)
template <class S>
SquareMatrix<S> adjugate3(const SquareMatrix<S> &m) {
    SquareMatrix<S> a(3);
    // explicit return type: gmp expression templates must not outlive
    // their operands
    auto minor2 = [&](int r0, int r1, int c0, int c1) -> S {
        return m(r0, c0) * m(r1, c1) - m(r0, c1) * m(r1, c0);
    };
    a(0, 0) = minor2(1, 2, 1, 2);
    a(0, 1) = -minor2(0, 2, 1, 2);
    a(0, 2) = minor2(0, 1, 1, 2);
    a(1, 0) = -minor2(1, 2, 0, 2);
    a(1, 1) = minor2(0, 2, 0, 2);
    a(1, 2) = -minor2(0, 1, 0, 2);
    a(2, 0) = minor2(1, 2, 0, 1);
    a(2, 1) = -minor2(0, 2, 0, 1);
    a(2, 2) = minor2(0, 1, 0, 1);
    return a;
}

template <class S>
bool sum_is_diagonal(const Fuchsian3<S> &sys, double tol) {
    SquareMatrix<S> sum = sys.residue_sum();
    double sc = scale_of(sys);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            if (i != j && !negligible(sum(i, j), tol, sc)) return false;
    return true;
}

} // namespace

Fuchsian3C to_complex(const Fuchsian3Q &sys) {
    return {to_complex(sys.B1), to_complex(sys.B2), to_complex(sys.B3),
            to_complex(sys.t), sys.spectral};
}

Fuchsian2C to_complex(const Fuchsian2Q &sys) {
    return {to_complex(sys.A1), to_complex(sys.A2), to_complex(sys.A3),
            to_complex(sys.t), sys.theta};
}

ThetaVector theta_from_spectral(const SpectralData3 &sp, int i, int j, int k) {
    if (i < 1 || i > 3 || j < 1 || j > 3 || k < 1 || k > 3 || i == j || i == k || j == k)
        throw math_error("theta_from_spectral needs a permutation of (1,2,3)");
    const Rational &mi = sp.mu[static_cast<size_t>(i - 1)];
    return {sp.lambda[0] - mi, sp.lambda[1] - mi, sp.lambda[2] - mi,
            sp.mu[static_cast<size_t>(k - 1)] - sp.mu[static_cast<size_t>(j - 1)]};
}

template <class S>
Fuchsian3<S> build_simple(const S &x, const S &y, const S &t, const SpectralData3 &sp) {
    const S one(1);
    if (t == S(0) || t == one)
        throw degenerate_parameterization("build_simple needs t outside {0,1}");
    S l1 = from_rational<S>(sp.lambda[0]), l2 = from_rational<S>(sp.lambda[1]),
      l3 = from_rational<S>(sp.lambda[2]);
    S m1 = from_rational<S>(sp.mu[0]), m2 = from_rational<S>(sp.mu[1]),
      m3 = from_rational<S>(sp.mu[2]);

    S b12 = l1 - m3 * y + (m1 - x * y) * (y - one);
    S b13 = l1 * t - m3 * y + (m1 - x * y) * (y - t);
    S b21 = l2 + (m3 * (y - t) - m1 * (y - one) + x * (y - t) * (y - one)) / (t - one);
    S b23 = (m2 - l3) * t - b13;
    S b32 = (m2 - l2 - b12) / t;
    S b31 = (m2 - l1 - b21) / t;

    Fuchsian3<S> sys{SquareMatrix<S>(3), SquareMatrix<S>(3), SquareMatrix<S>(3), t, sp};
    sys.B1(0, 0) = l1;
    sys.B1(0, 1) = b12;
    sys.B1(0, 2) = b13;
    sys.B2(1, 0) = b21;
    sys.B2(1, 1) = l2;
    sys.B2(1, 2) = b23;
    sys.B3(2, 0) = b31;
    sys.B3(2, 1) = b32;
    sys.B3(2, 2) = l3;
    return sys;
}

template <class S>
FullParameterization<S> build_full_parameterization(const S &x, const S &y, const S &t,
                                                    const SpectralData3 &sp) {
    const S one(1), zero(0);
    if (t == zero || t == one)
        throw degenerate_parameterization("build_full needs t outside {0,1}");
    if (y == zero || y == one || y == t)
        throw degenerate_parameterization("build_full needs y outside {0,1,t}");

    S m1 = from_rational<S>(sp.mu[0]), m3 = from_rational<S>(sp.mu[2]);
    std::array<S, 3> theta{from_rational<S>(sp.lambda[0]) - m1,
                           from_rational<S>(sp.lambda[1]) - m1,
                           from_rational<S>(sp.lambda[2]) - m1};

    // v_i = u_i z_i is pinned by three of the six equations
    std::array<S, 3> v;
    v[0] = y / t;
    v[2] = (one - y) / (t - one);
    v[1] = -v[0] - v[2];

    // remaining equations are linear in z along the kernel direction d
    std::array<S, 3> pole{zero, t, one};
    auto inv_shift = [&](int i) -> S { return one / (y - pole[static_cast<size_t>(i)]); };
    std::array<S, 3> d{inv_shift(1) - inv_shift(2), inv_shift(2) - inv_shift(0),
                       inv_shift(0) - inv_shift(1)};

    S m = m1 - m3;
    S denom = inv_shift(0) - inv_shift(1);
    if (denom == zero) throw singular_system("degenerate z-system");
    std::array<S, 3> z0;
    z0[0] = (x - m * inv_shift(1)) / denom;
    z0[1] = m - z0[0];
    z0[2] = zero;

    auto quad = [&](const std::array<S, 3> &zz) {
        S q(0);
        for (int i = 0; i < 3; ++i)
            q += zz[static_cast<size_t>(i)] *
                 (zz[static_cast<size_t>(i)] + theta[static_cast<size_t>(i)]) /
                 v[static_cast<size_t>(i)];
        return q;
    };
    S lin(0);
    for (int i = 0; i < 3; ++i)
        lin += d[static_cast<size_t>(i)] *
               (S(2) * z0[static_cast<size_t>(i)] + theta[static_cast<size_t>(i)]) /
               v[static_cast<size_t>(i)];
    if (lin == zero) throw singular_system("z-equations have no unique solution");
    S tau = -quad(z0) / lin;

    FullParameterization<S> out{{}, {}, {}, {}, Fuchsian3<S>{SquareMatrix<S>(3),
                                                             SquareMatrix<S>(3),
                                                             SquareMatrix<S>(3), t, sp}};
    for (int i = 0; i < 3; ++i) {
        out.z[static_cast<size_t>(i)] = z0[static_cast<size_t>(i)] + tau * d[static_cast<size_t>(i)];
        if (out.z[static_cast<size_t>(i)] == zero)
            throw singular_system("z_i vanishes in the full parameterization");
        out.u[static_cast<size_t>(i)] = v[static_cast<size_t>(i)] / out.z[static_cast<size_t>(i)];
        if (out.u[static_cast<size_t>(i)] == zero)
            throw singular_system("u_i vanishes in the full parameterization");
        out.w[static_cast<size_t>(i)] =
            (out.z[static_cast<size_t>(i)] + theta[static_cast<size_t>(i)]) / out.u[static_cast<size_t>(i)];
    }

    // c_i from the three linear conditions
    SquareMatrix<S> mc(3);
    for (int i = 0; i < 3; ++i) {
        mc(0, i) = out.z[static_cast<size_t>(i)];
        mc(1, i) = out.w[static_cast<size_t>(i)];
        mc(2, i) = (t - pole[static_cast<size_t>(i)]) * out.z[static_cast<size_t>(i)];
    }
    SquareMatrix<S> mc_inv = inverse(mc); // throws singular_system when degenerate
    for (int i = 0; i < 3; ++i) out.c[static_cast<size_t>(i)] = mc_inv(i, 2);

    // basis vectors f_i = (c_i, u_i, 1), dual basis from the inverse
    SquareMatrix<S> f(3);
    for (int i = 0; i < 3; ++i) {
        f(0, i) = out.c[static_cast<size_t>(i)];
        f(1, i) = out.u[static_cast<size_t>(i)];
        f(2, i) = one;
    }
    SquareMatrix<S> f_inv = inverse(f);

    std::array<SquareMatrix<S> *, 3> b{&out.system.B1, &out.system.B2, &out.system.B3};
    for (int i = 0; i < 3; ++i) {
        std::array<S, 3> fi{f(0, i), f(1, i), f(2, i)};
        std::array<S, 3> row{m1 * f_inv(i, 0),
                             out.w[static_cast<size_t>(i)] + m1 * f_inv(i, 1),
                             -out.z[static_cast<size_t>(i)] + m1 * f_inv(i, 2)};
        *b[static_cast<size_t>(i)] = outer(fi, row);
    }
    return out;
}

template <class S>
Fuchsian3<S> normalize_residue_sum(const Fuchsian3<S> &sys, double tol) {
    if (sum_is_diagonal(sys, tol)) return sys;
    if (!sys.spectral.mu_distinct())
        throw singular_system("normalization needs distinct mu");
    SquareMatrix<S> sum = sys.residue_sum();
    SquareMatrix<S> p(3);
    for (int i = 0; i < 3; ++i) {
        SquareMatrix<S> shifted = sum;
        S mi = from_rational<S>(sys.spectral.mu[static_cast<size_t>(i)]);
        for (int dgn = 0; dgn < 3; ++dgn) shifted(dgn, dgn) -= mi;
        SquareMatrix<S> adj = adjugate3(shifted);
        // any nonzero column of the adjugate spans the mu_i eigenspace
        int best = -1;
        if constexpr (std::is_same_v<S, Rational>) {
            for (int c = 0; c < 3 && best < 0; ++c)
                if (adj(0, c) != S(0) || adj(1, c) != S(0) || adj(2, c) != S(0)) best = c;
        } else {
            double top = 0.0;
            for (int c = 0; c < 3; ++c) {
                double mag = std::abs(adj(0, c)) + std::abs(adj(1, c)) + std::abs(adj(2, c));
                if (mag > top) { top = mag; best = c; }
            }
        }
        if (best < 0) throw singular_system("residue sum has a defective eigenvalue");
        for (int r = 0; r < 3; ++r) p(r, i) = adj(r, best);
    }
    SquareMatrix<S> p_inv = inverse(p);
    Fuchsian3<S> out{p_inv * sys.B1 * p, p_inv * sys.B2 * p, p_inv * sys.B3 * p, sys.t,
                     sys.spectral};
    if (!sum_is_diagonal(out, std::sqrt(tol)))
        throw singular_system("normalization failed to diagonalize the residue sum");
    return out;
}

template <class S>
S extract_y(const Fuchsian3<S> &sys, int j, int k, double tol) {
    if (j < 1 || j > 3 || k < 1 || k > 3 || j == k)
        throw math_error("extract_y needs distinct indices in 1..3");
    Fuchsian3<S> n = normalize_residue_sum(sys, tol);
    int r = j - 1, c = k - 1;
    double sc = scale_of(n);
    // entry of z(z-1)(z-t) Bhat(z) is a z + b once the z^2 part cancels
    S quad = n.B1(r, c) + n.B2(r, c) + n.B3(r, c);
    if (!negligible(quad, tol, sc))
        throw singular_system("matrix entry is not linear in z");
    const S one(1);
    S a = -((one + n.t) * n.B1(r, c) + n.B2(r, c) + n.t * n.B3(r, c));
    S b = n.t * n.B1(r, c);
    if (negligible(a, tol, sc))
        throw singular_system("matrix entry is degenerate (constant in z)");
    return -b / a;
}

template <class S>
S extract_y_2x2(const Fuchsian2<S> &sys, double tol) {
    double sc = 1.0;
    if constexpr (!std::is_same_v<S, Rational>)
        sc = std::max({max_abs(sys.A1), max_abs(sys.A2), max_abs(sys.A3), 1.0});
    SquareMatrix<S> a4 = sys.a4();
    if (!negligible(a4(0, 1), tol, sc))
        throw singular_system("2x2 system is not normalized (A4 not diagonal)");
    const S one(1);
    S a = -((one + sys.t) * sys.A1(0, 1) + sys.A2(0, 1) + sys.t * sys.A3(0, 1));
    S b = sys.t * sys.A1(0, 1);
    if (negligible(a, tol, sc))
        throw singular_system("top-right entry is degenerate (constant in z)");
    return -b / a;
}

template <class S>
S recover_x(const Fuchsian3<S> &sys, const S &y, double tol) {
    if (sys.spectral.mu[2] == 0) throw singular_system("recover_x needs mu3 != 0");
    if (y == S(0) || y == S(1) || y == sys.t)
        throw pole_error("recover_x evaluated at a pole of the connection");
    Fuchsian3<S> n = normalize_residue_sum(sys, tol);
    const S one(1);
    S bhat = n.B1(2, 2) / y + n.B2(2, 2) / (y - n.t) + n.B3(2, 2) / (y - one);
    S m1 = from_rational<S>(sys.spectral.mu[0]), m3 = from_rational<S>(sys.spectral.mu[2]);
    return (m1 - m3) / m3 * bhat;
}

template <class S>
S recover_x_via_b11(const Fuchsian3<S> &sys, const S &y_shifted, double tol) {
    if (sys.spectral.mu[0] == 0) throw singular_system("B11 route needs mu1 != 0");
    if (y_shifted == S(0) || y_shifted == S(1) || y_shifted == sys.t)
        throw pole_error("recover_x evaluated at a pole of the connection");
    Fuchsian3<S> n = normalize_residue_sum(sys, tol);
    const S one(1);
    S bhat = n.B1(0, 0) / y_shifted + n.B2(0, 0) / (y_shifted - n.t) +
             n.B3(0, 0) / (y_shifted - one);
    S m1 = from_rational<S>(sys.spectral.mu[0]), m3 = from_rational<S>(sys.spectral.mu[2]);
    return (m3 - m1) / m1 * bhat;
}

template <class S>
Fuchsian3<S> permute_mu(const Fuchsian3<S> &sys, const std::array<int, 3> &perm) {
    std::array<bool, 3> seen{false, false, false};
    for (int v : perm) {
        if (v < 0 || v > 2 || seen[static_cast<size_t>(v)])
            throw math_error("permute_mu needs a permutation of (0,1,2)");
        seen[static_cast<size_t>(v)] = true;
    }
    SquareMatrix<S> p(3);
    for (int j = 0; j < 3; ++j) p(perm[static_cast<size_t>(j)], j) = S(1);
    SquareMatrix<S> p_inv = inverse(p);
    SpectralData3 sp = sys.spectral;
    for (int j = 0; j < 3; ++j)
        sp.mu[static_cast<size_t>(perm[static_cast<size_t>(j)])] = sys.spectral.mu[static_cast<size_t>(j)];
    return {p * sys.B1 * p_inv, p * sys.B2 * p_inv, p * sys.B3 * p_inv, sys.t, sp};
}

template <class S>
Fuchsian3<S> embed_2x2(const Fuchsian2<S> &sys) {
    const auto &th = sys.theta;
    Rational delta = th.delta();
    SpectralData3 sp({th[0], th[1], th[2]},
                     {Rational(0), delta - th[3], delta});
    std::array<const SquareMatrix<S> *, 3> a{&sys.A1, &sys.A2, &sys.A3};
    Fuchsian3<S> out{SquareMatrix<S>(3), SquareMatrix<S>(3), SquareMatrix<S>(3), sys.t, sp};
    std::array<SquareMatrix<S> *, 3> b{&out.B1, &out.B2, &out.B3};
    for (int i = 0; i < 3; ++i) {
        S half_theta = from_rational<S>(th[i] / 2);
        for (int r = 0; r < 2; ++r)
            for (int c = 0; c < 2; ++c) {
                (*b[static_cast<size_t>(i)])(r + 1, c + 1) = (*a[static_cast<size_t>(i)])(r, c);
                if (r == c) (*b[static_cast<size_t>(i)])(r + 1, c + 1) += half_theta;
            }
    }
    return out;
}

template <class S>
Fuchsian2<S> restrict_to_2x2(const Fuchsian3<S> &sys, double tol) {
    if (sys.spectral.mu[0] != 0)
        throw math_error("restrict_to_2x2 needs mu1 = 0");
    double sc = scale_of(sys);
    for (const auto *bp : sys.residues())
        for (int r = 0; r < 3; ++r)
            if (!negligible((*bp)(r, 0), tol, sc))
                throw math_error("restrict_to_2x2 needs a zero first column");
    ThetaVector th{sys.spectral.lambda[0], sys.spectral.lambda[1], sys.spectral.lambda[2],
                   sys.spectral.mu[2] - sys.spectral.mu[1]};
    std::array<const SquareMatrix<S> *, 3> b = sys.residues();
    std::array<SquareMatrix<S>, 3> a{SquareMatrix<S>(2), SquareMatrix<S>(2),
                                     SquareMatrix<S>(2)};
    for (int i = 0; i < 3; ++i) {
        S half_theta = from_rational<S>(th[i] / 2);
        for (int r = 0; r < 2; ++r)
            for (int c = 0; c < 2; ++c) {
                a[static_cast<size_t>(i)](r, c) = (*b[static_cast<size_t>(i)])(r + 1, c + 1);
                if (r == c) a[static_cast<size_t>(i)](r, c) -= half_theta;
            }
    }
    return {a[0], a[1], a[2], sys.t, th};
}

namespace {

PolynomialQ poly(std::initializer_list<long> ascending) {
    std::vector<Rational> c;
    for (long v : ascending) c.emplace_back(v);
    return PolynomialQ(std::move(c));
}

Rational eval_ratio(const PolynomialQ &num, const PolynomialQ &den, const Rational &s) {
    Rational d = den.evaluate(s);
    if (d == 0) throw pole_error("klein family entry has a pole at this s");
    return num.evaluate(s) / d;
}

} // namespace

SpectralData3 klein_spectral() {
    return SpectralData3({Rational(1, 2), Rational(1, 2), Rational(1, 2)},
                         {Rational(3, 14), Rational(5, 14), Rational(13, 14)});
}

Fuchsian3Q klein_family(const Rational &s) {
    if (s == 0 || s == 1)
        throw degenerate_parameterization("klein_family needs s outside {0,1}");
    const PolynomialQ q1 = poly({7, -7, 4});   // 4s^2-7s+7
    const PolynomialQ q2 = poly({4, -7, 7});   // 7s^2-7s+4
    const PolynomialQ q3 = poly({4, -1, 4});   // 4s^2-s+4
    const PolynomialQ sm1 = poly({-1, 1});
    const PolynomialQ svar = poly({0, 1});
    const PolynomialQ c21 = poly({21});

    Rational b12 = eval_ratio(poly({-22, 24, -21, 14}), c21 * svar * q1, s);
    Rational b13 = eval_ratio(poly({-14, 21, -24, 22}), c21 * q2, s);
    Rational b21 = eval_ratio(poly({5, 24, -21, 14}), c21 * sm1 * q3, s);
    Rational b23 = eval_ratio(poly({-5, 39, -42, 22}), c21 * q2, s);
    Rational b31 = eval_ratio(poly({14, -21, 24, 5}), c21 * sm1 * q3, s);
    Rational b32 = eval_ratio(poly({22, -42, 39, -5}), c21 * svar * q1, s);
    Rational t = eval_ratio(q2 * q2, svar * svar * svar * q1 * q1, s);
    if (t == 0 || t == 1)
        throw degenerate_parameterization("klein_family hits t in {0,1}");

    Fuchsian3Q sys{MatQ(3), MatQ(3), MatQ(3), t, klein_spectral()};
    Rational half(1, 2);
    sys.B1(0, 0) = half;
    sys.B1(0, 1) = b12;
    sys.B1(0, 2) = b13;
    sys.B2(1, 0) = b21;
    sys.B2(1, 1) = half;
    sys.B2(1, 2) = b23;
    sys.B3(2, 0) = b31;
    sys.B3(2, 1) = b32;
    sys.B3(2, 2) = half;
    return sys;
}

SolutionCurve klein_curve() {
    PolynomialQ num = poly({5, -8, 5}) * poly({4, -7, 7});
    PolynomialQ den = poly({0, 1}) * poly({-2, 1}) * poly({1, 1}) * poly({-1, 2}) *
                      poly({7, -7, 4});
    RationalFunctionQ y(-num, den);
    const PolynomialQ q2 = poly({4, -7, 7}); // 7s^2-7s+4
    const PolynomialQ q1 = poly({7, -7, 4}); // 4s^2-7s+7
    const PolynomialQ s3 = poly({0, 0, 0, 1});
    RationalFunctionQ t(q2 * q2, s3 * q1 * q1);
    ThetaVector theta{Rational(2, 7), Rational(2, 7), Rational(2, 7), Rational(4, 7)};
    return SolutionCurve(std::move(y), std::move(t), std::move(theta));
}

#define PVI_INSTANTIATE(S)                                                              \
    template Fuchsian3<S> build_simple<S>(const S &, const S &, const S &,              \
                                          const SpectralData3 &);                       \
    template FullParameterization<S> build_full_parameterization<S>(                    \
        const S &, const S &, const S &, const SpectralData3 &);                        \
    template Fuchsian3<S> normalize_residue_sum<S>(const Fuchsian3<S> &, double);       \
    template S extract_y<S>(const Fuchsian3<S> &, int, int, double);                    \
    template S extract_y_2x2<S>(const Fuchsian2<S> &, double);                          \
    template S recover_x<S>(const Fuchsian3<S> &, const S &, double);                   \
    template S recover_x_via_b11<S>(const Fuchsian3<S> &, const S &, double);           \
    template Fuchsian3<S> permute_mu<S>(const Fuchsian3<S> &, const std::array<int, 3> &); \
    template Fuchsian3<S> embed_2x2<S>(const Fuchsian2<S> &);                           \
    template Fuchsian2<S> restrict_to_2x2<S>(const Fuchsian3<S> &, double);

PVI_INSTANTIATE(Rational)
PVI_INSTANTIATE(Complex)
#undef PVI_INSTANTIATE

} // namespace pvi
