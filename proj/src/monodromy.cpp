#include "pvi/monodromy.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

namespace pvi {

Complex PathPiece::at(double tau) const {
    if (kind == segment) return a + (b - a) * tau;
    double ang = angle_from + (angle_to - angle_from) * tau;
    return center + std::polar(radius, ang);
}

Complex PathPiece::velocity(double tau) const {
    if (kind == segment) return b - a;
    double ang = angle_from + (angle_to - angle_from) * tau;
    return Complex(0.0, 1.0) * std::polar(radius, ang) * (angle_to - angle_from);
}

namespace {

double point_segment_distance(const Complex &p, const Complex &a, const Complex &b) {
    Complex d = b - a;
    double len2 = std::norm(d);
    if (len2 == 0.0) return std::abs(p - a);
    double tau = std::clamp(((p - a) * std::conj(d)).real() / len2, 0.0, 1.0);
    return std::abs(p - (a + d * tau));
}

double point_piece_distance(const Complex &p, const PathPiece &piece) {
    if (piece.kind == PathPiece::segment)
        return point_segment_distance(p, piece.a, piece.b);
    double sweep = std::abs(piece.angle_to - piece.angle_from);
    double radial = std::abs(std::abs(p - piece.center) - piece.radius);
    if (sweep >= 2.0 * M_PI - 1e-12) return radial;
    // partial arc: check whether the angular foot lies inside the sweep
    double ang = std::arg(p - piece.center);
    double lo = std::min(piece.angle_from, piece.angle_to);
    double hi = std::max(piece.angle_from, piece.angle_to);
    for (int k = -2; k <= 2; ++k) {
        double cand = ang + 2.0 * M_PI * k;
        if (cand >= lo && cand <= hi) return radial;
    }
    double d0 = std::abs(p - piece.at(0.0));
    double d1 = std::abs(p - piece.at(1.0));
    return std::min(d0, d1);
}

} // namespace

double min_distance(const LoopPath &path, const Complex &point) {
    double d = std::numeric_limits<double>::infinity();
    for (const auto &piece : path.pieces)
        d = std::min(d, point_piece_distance(point, piece));
    return d;
}

LoopPath simple_loop(const Complex &base, const Complex &center, double radius,
                     int encircled, bool positive) {
    Complex u = base - center;
    if (std::abs(u) <= radius)
        throw math_error("loop base lies inside the loop circle");
    Complex dir = u / std::abs(u);
    Complex standoff = center + dir * radius;
    double phi = std::arg(dir);
    LoopPath loop;
    loop.base = base;
    loop.encircled = encircled;
    loop.clearance = radius;
    loop.pieces.push_back(PathPiece::line(base, standoff));
    loop.pieces.push_back(PathPiece::circle_arc(center, radius, phi,
                                                phi + (positive ? 2.0 : -2.0) * M_PI));
    loop.pieces.push_back(PathPiece::line(standoff, base));
    return loop;
}

namespace {

// Dormand-Prince 5(4) embedded pair
struct Dopri {
    static constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
    static constexpr double a21 = 1.0 / 5;
    static constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
    static constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
    static constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187,
                            a53 = 64448.0 / 6561, a54 = -212.0 / 729;
    static constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33,
                            a63 = 46732.0 / 5247, a64 = 49.0 / 176,
                            a65 = -5103.0 / 18656;
    static constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192,
                            b5 = -2187.0 / 6784, b6 = 11.0 / 84;
    static constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920,
                            e5 = -17253.0 / 339200, e6 = 22.0 / 525, e7 = -1.0 / 40;
};

} // namespace

MatC transport(const std::function<MatC(Complex)> &system, int dim, const LoopPath &path,
               const TransportSettings &settings) {
    MatC phi = MatC::identity(dim);
    long steps = 0;
    for (const auto &piece : path.pieces) {
        auto rhs = [&](double tau, const MatC &y) {
            return system(piece.at(tau)) * y * piece.velocity(tau);
        };
        double tau = 0.0, h = 0.05;
        while (tau < 1.0) {
            if (++steps > settings.max_steps)
                throw step_underflow("transport exceeded the step budget");
            h = std::min(h, 1.0 - tau);
            MatC k1 = rhs(tau, phi);
            MatC k2 = rhs(tau + Dopri::c2 * h, phi + k1 * Complex(Dopri::a21 * h));
            MatC k3 = rhs(tau + Dopri::c3 * h,
                          phi + k1 * Complex(Dopri::a31 * h) + k2 * Complex(Dopri::a32 * h));
            MatC k4 = rhs(tau + Dopri::c4 * h,
                          phi + k1 * Complex(Dopri::a41 * h) + k2 * Complex(Dopri::a42 * h) +
                              k3 * Complex(Dopri::a43 * h));
            MatC k5 = rhs(tau + Dopri::c5 * h,
                          phi + k1 * Complex(Dopri::a51 * h) + k2 * Complex(Dopri::a52 * h) +
                              k3 * Complex(Dopri::a53 * h) + k4 * Complex(Dopri::a54 * h));
            MatC k6 = rhs(tau + h, phi + k1 * Complex(Dopri::a61 * h) +
                                       k2 * Complex(Dopri::a62 * h) +
                                       k3 * Complex(Dopri::a63 * h) +
                                       k4 * Complex(Dopri::a64 * h) +
                                       k5 * Complex(Dopri::a65 * h));
            MatC ynew = phi + k1 * Complex(Dopri::b1 * h) + k3 * Complex(Dopri::b3 * h) +
                        k4 * Complex(Dopri::b4 * h) + k5 * Complex(Dopri::b5 * h) +
                        k6 * Complex(Dopri::b6 * h);
            MatC k7 = rhs(tau + h, ynew);
            MatC errm = k1 * Complex(Dopri::e1 * h) + k3 * Complex(Dopri::e3 * h) +
                        k4 * Complex(Dopri::e4 * h) + k5 * Complex(Dopri::e5 * h) +
                        k6 * Complex(Dopri::e6 * h) + k7 * Complex(Dopri::e7 * h);
            double err = max_abs(errm);
            double tolerance = settings.tol * std::max(1.0, max_abs(phi));
            if (err <= tolerance) {
                tau += h;
                phi = std::move(ynew);
            }
            double factor = err > 0 ? 0.9 * std::pow(tolerance / err, 0.2) : 5.0;
            h *= std::clamp(factor, 0.2, 5.0);
            if (h < 1e-14) throw step_underflow("transport step size underflow");
        }
    }
    return phi;
}

MatC transport(const Fuchsian3C &sys, const LoopPath &path,
               const TransportSettings &settings) {
    Complex t = sys.t;
    auto eval = [B1 = sys.B1, B2 = sys.B2, B3 = sys.B3, t](Complex z) {
        return B1 * (Complex(1.0) / z) + B2 * (Complex(1.0) / (z - t)) +
               B3 * (Complex(1.0) / (z - Complex(1.0)));
    };
    return transport(eval, 3, path, settings);
}

MatC transport(const Fuchsian2C &sys, const LoopPath &path,
               const TransportSettings &settings) {
    Complex t = sys.t;
    auto eval = [A1 = sys.A1, A2 = sys.A2, A3 = sys.A3, t](Complex z) {
        return A1 * (Complex(1.0) / z) + A2 * (Complex(1.0) / (z - t)) +
               A3 * (Complex(1.0) / (z - Complex(1.0)));
    };
    return transport(eval, 2, path, settings);
}

std::vector<LoopPath> monodromy_loops(const Complex &t, const TransportSettings &settings) {
    std::array<Complex, 3> sing{Complex(0.0), t, Complex(1.0)};
    double gap = std::min({std::abs(sing[1] - sing[0]), std::abs(sing[2] - sing[0]),
                           std::abs(sing[2] - sing[1])});
    if (gap == 0.0) throw degenerate_parameterization("coincident singularities");
    double radius = settings.radius > 0 ? settings.radius : gap / 4.0;
    double clearance = settings.clearance > 0 ? settings.clearance : 0.9 * radius;

    std::array<Complex, 5> candidates{settings.base, Complex(0.5, 0.5), Complex(0.5, 1.5),
                                      Complex(-1.0, 1.0), Complex(2.0, 2.0)};
    for (const Complex &base : candidates) {
        bool base_ok = true;
        for (const auto &p : sing)
            if (std::abs(base - p) < 2.0 * radius) base_ok = false;
        if (!base_ok) continue;
        std::vector<LoopPath> loops;
        bool clear = true;
        for (int i = 0; i < 3 && clear; ++i) {
            LoopPath loop = simple_loop(base, sing[static_cast<size_t>(i)], radius, i);
            for (int j = 0; j < 3; ++j)
                if (j != i &&
                    min_distance(loop, sing[static_cast<size_t>(j)]) < clearance)
                    clear = false;
            loops.push_back(std::move(loop));
        }
        if (clear) return loops;
    }
    throw math_error("no admissible base point for the monodromy loops");
}

namespace {

// loop around infinity: a large clockwise circle enclosing 0, t, 1,
// based like the other loops so the products compose in pi_1
LoopPath infinity_loop(const Complex &t, const Complex &base, double radius) {
    std::array<Complex, 3> sing{Complex(0.0), t, Complex(1.0)};
    Complex c = (sing[0] + sing[1] + sing[2]) / 3.0;
    double r = 0.0;
    for (const auto &p : sing) r = std::max(r, std::abs(p - c));
    r = std::max(r, std::abs(base - c)) + 4.0 * radius;
    Complex dir = (base - c) / std::abs(base - c);
    Complex standoff = c + dir * r;
    double phi = std::arg(dir);
    LoopPath loop;
    loop.base = base;
    loop.encircled = -1;
    loop.clearance = radius;
    loop.pieces.push_back(PathPiece::line(base, standoff));
    loop.pieces.push_back(PathPiece::circle_arc(c, r, phi, phi - 2.0 * M_PI));
    loop.pieces.push_back(PathPiece::line(standoff, base));
    return loop;
}

template <class Sys>
MonodromyRep monodromy_rep_impl(const Sys &sys, const TransportSettings &settings) {
    auto loops = monodromy_loops(sys.t, settings);
    MonodromyRep rep;
    for (int i = 0; i < 3; ++i)
        rep.m[static_cast<size_t>(i)] = transport(sys, loops[static_cast<size_t>(i)], settings);
    MatC prod = rep.m[2] * rep.m[1] * rep.m[0];
    rep.m[3] = inverse(prod);
    LoopPath inf = infinity_loop(sys.t, loops[0].base, loops[0].clearance);
    MatC m4_indep = transport(sys, inf, settings);
    double scale = std::max(1.0, max_abs(m4_indep) * max_abs(prod));
    rep.defect = distance(m4_indep * prod, MatC::identity(prod.size())) / scale;
    return rep;
}

} // namespace

MonodromyRep monodromy_rep(const Fuchsian3C &sys, const TransportSettings &settings) {
    return monodromy_rep_impl(sys, settings);
}

MonodromyRep monodromy_rep(const Fuchsian2C &sys, const TransportSettings &settings) {
    return monodromy_rep_impl(sys, settings);
}

std::vector<Complex> monodromy_invariants(const MonodromyRep &rep) {
    const MatC &m1 = rep.m[0], &m2 = rep.m[1], &m3 = rep.m[2];
    return {m1.trace(),        m2.trace(),        m3.trace(),        rep.m[3].trace(),
            (m1 * m2).trace(), (m1 * m3).trace(), (m2 * m3).trace(), (m1 * m2 * m3).trace()};
}

namespace {

struct ElementIndex {
    double tol;
    std::map<std::pair<long, long>, std::vector<int>> buckets;

    std::pair<long, long> key(const MatC &m) const {
        Complex tr = m.trace();
        double q = std::max(tol * 100.0, 1e-6);
        return {std::lround(tr.real() / q), std::lround(tr.imag() / q)};
    }

    // returns index of the matching element, -1 if new; aborts when the
    // nearest element is in the ambiguous band (tol, 10 tol)
    int locate(const std::vector<MatC> &elements, const MatC &m) const {
        auto [kr, ki] = key(m);
        double best = std::numeric_limits<double>::infinity();
        int best_idx = -1;
        for (long dr = -1; dr <= 1; ++dr)
            for (long di = -1; di <= 1; ++di) {
                auto it = buckets.find({kr + dr, ki + di});
                if (it == buckets.end()) continue;
                for (int idx : it->second) {
                    double d = distance(elements[static_cast<size_t>(idx)], m);
                    if (d < best) { best = d; best_idx = idx; }
                }
            }
        if (best <= tol) return best_idx;
        if (best <= 10.0 * tol)
            throw ambiguous_canonicalization(
                "two group elements within 10*tol; tighten the integration");
        return -1;
    }

    void insert(const MatC &m, int idx) { buckets[key(m)].push_back(idx); }
};

} // namespace

int GroupTable::find(const MatC &m, double tol) const {
    ElementIndex index{tol, {}};
    for (int i = 0; i < order; ++i) index.insert(elements[static_cast<size_t>(i)], i);
    return index.locate(elements, m);
}

std::optional<GroupTable> group_closure(const std::vector<MatC> &generators, double tol,
                                        int max_order) {
    if (generators.empty()) throw math_error("group_closure needs generators");
    int dim = generators.front().size();
    GroupTable g;
    ElementIndex index{tol, {}};
    auto add = [&](const MatC &m) -> int {
        int found = index.locate(g.elements, m);
        if (found >= 0) return found;
        g.elements.push_back(m);
        int idx = static_cast<int>(g.elements.size()) - 1;
        index.insert(m, idx);
        return idx;
    };
    add(MatC::identity(dim));
    for (const auto &gen : generators) add(gen);
    size_t cursor = 0;
    while (cursor < g.elements.size()) {
        if (static_cast<int>(g.elements.size()) > max_order) return std::nullopt;
        MatC cur = g.elements[cursor];
        for (const auto &gen : generators) add(cur * gen);
        ++cursor;
    }
    if (static_cast<int>(g.elements.size()) > max_order) return std::nullopt;
    g.order = static_cast<int>(g.elements.size());
    g.table.resize(static_cast<size_t>(g.order) * g.order);
    for (int i = 0; i < g.order; ++i)
        for (int j = 0; j < g.order; ++j) {
            int k = index.locate(g.elements, g.elements[static_cast<size_t>(i)] *
                                                 g.elements[static_cast<size_t>(j)]);
            if (k < 0)
                throw ambiguous_canonicalization("closure table lookup failed");
            g.table[static_cast<size_t>(i) * g.order + j] = k;
        }
    return g;
}

bool is_pseudo_reflection(const MatC &m, double tol) {
    int n = m.size();
    MatC d = m - MatC::identity(n);
    double scale = std::max(1.0, max_abs(d) * max_abs(d));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = 0; k < n; ++k)
                for (int l = k + 1; l < n; ++l) {
                    Complex minor = d(i, k) * d(j, l) - d(i, l) * d(j, k);
                    if (std::abs(minor) > tol * scale) return false;
                }
    return true;
}

} // namespace pvi
