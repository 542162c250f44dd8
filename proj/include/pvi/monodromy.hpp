#pragma once

#include "pvi/fuchsian.hpp"
#include "pvi/linalg.hpp"

#include <functional>
#include <optional>
#include <vector>

namespace pvi {

struct ambiguous_canonicalization : math_error {
    using math_error::math_error;
};
struct step_underflow : math_error {
    using math_error::math_error;
};

// Piecewise path in the z plane: straight segments and circular arcs,
// both parameterized over [0,1].
struct PathPiece {
    enum Kind { segment, arc } kind;
    Complex a, b;      // segment endpoints
    Complex center;    // arc data
    double radius = 0.0;
    double angle_from = 0.0, angle_to = 0.0; // counterclockwise when increasing

    Complex at(double tau) const;
    Complex velocity(double tau) const;

    static PathPiece line(Complex from, Complex to) {
        PathPiece p;
        p.kind = segment;
        p.a = from;
        p.b = to;
        return p;
    }
    static PathPiece circle_arc(Complex center, double radius, double from, double to) {
        PathPiece p;
        p.kind = arc;
        p.center = center;
        p.radius = radius;
        p.angle_from = from;
        p.angle_to = to;
        return p;
    }
};

// Closed loop based at `base` around singularity index `encircled`
// (-1 for the loop around infinity).
struct LoopPath {
    Complex base;
    std::vector<PathPiece> pieces;
    int encircled = -1;
    double clearance = 0.0;
};

double min_distance(const LoopPath &path, const Complex &point);

// spoke out to a standoff point, full positively-oriented circle, spoke back
LoopPath simple_loop(const Complex &base, const Complex &center, double radius,
                     int encircled, bool positive = true);

// Base above the real axis and positively oriented loops make the clockwise
// circle around infinity satisfy M4 M3 M2 M1 = 1 for real t in (0,1).
struct TransportSettings {
    double tol = 1e-12;          // local integration tolerance
    long max_steps = 4000000;
    double clearance = 0.0;      // 0: use loop radius
    double radius = 0.0;         // 0: min pairwise gap / 4
    Complex base{0.5, 0.5};
};

// Parallel transport of the fundamental solution along a path:
// solves Phi' = A(z) Phi with Phi(start) = I.
MatC transport(const std::function<MatC(Complex)> &system, int dim, const LoopPath &path,
               const TransportSettings &settings = {});

MatC transport(const Fuchsian3C &sys, const LoopPath &path,
               const TransportSettings &settings = {});
MatC transport(const Fuchsian2C &sys, const LoopPath &path,
               const TransportSettings &settings = {});

struct MonodromyRep {
    std::array<MatC, 4> m; // loops around 0, t, 1, infinity; m4 = (m3 m2 m1)^-1
    double defect = 0.0;   // from an independent transport of the product loop
};

// conjugation invariants: Tr M1..M3, Tr MiMj, Tr M1M2M3
std::vector<Complex> monodromy_invariants(const MonodromyRep &rep);

MonodromyRep monodromy_rep(const Fuchsian3C &sys, const TransportSettings &settings = {});
MonodromyRep monodromy_rep(const Fuchsian2C &sys, const TransportSettings &settings = {});

// the loops themselves, for callers that need matching geometry
std::vector<LoopPath> monodromy_loops(const Complex &t, const TransportSettings &settings);

struct GroupTable {
    std::vector<MatC> elements; // canonical representatives, BFS order
    std::vector<int> table;     // order x order multiplication indices
    int order = 0;

    int mul(int i, int j) const { return table[static_cast<size_t>(i) * order + j]; }
    int find(const MatC &m, double tol) const;
};

// Breadth-first closure of the generated matrix group with tolerance-based
// identification; nullopt when max_order is exceeded. Two elements closer
// than 10*tol but not within tol abort with ambiguous_canonicalization.
std::optional<GroupTable> group_closure(const std::vector<MatC> &generators, double tol,
                                        int max_order);

// identity plus a rank-one matrix, at tolerance
bool is_pseudo_reflection(const MatC &m, double tol);

} // namespace pvi
