#pragma once

#include "pvi/monodromy.hpp"

namespace pvi {

struct FlowSettings {
    double tol = 1e-11;       // local integration tolerance
    long max_steps = 4000000;
    double clearance = 0.02;  // detour radius around t in {0, 1}
};

// Right-hand sides of the Schlesinger system at pole positions (0, t, 1):
// commutator expressions with zero trace; their sum vanishes, so the
// residue at infinity is preserved.
std::array<MatC, 3> schlesinger_rhs(const MatC &b1, const MatC &b2, const MatC &b3,
                                    const Complex &t);

// straight path from `from` to `to` with semicircular detours around 0, 1
std::vector<PathPiece> plan_t_path(const Complex &from, const Complex &to,
                                   double clearance);

// Integrates the residues to t_target; spectral/theta data is carried over
// unchanged (it is conserved by the flow).
Fuchsian3C flow(const Fuchsian3C &state, const Complex &t_target,
                const FlowSettings &settings = {});
Fuchsian2C flow(const Fuchsian2C &state, const Complex &t_target,
                const FlowSettings &settings = {});

// log k and log l obtained by integrating
//   dlog k/dt = (th4 - 1)(y - t) / (t(t-1))
//   dlog l/dt = (delta - 1)/(t(t-1)) * (y - t - (delta - th4)/p)
// along a sampled path; p = x + sum th_i/(y - a_i) must stay away from 0.
struct QuadratureState {
    Complex log_k{0.0, 0.0};
    Complex log_l{0.0, 0.0};
};

std::vector<QuadratureState> quadratures(const std::vector<Complex> &y_path,
                                         const std::vector<Complex> &x_path,
                                         const ThetaVector &theta,
                                         const std::vector<Complex> &t_path);

struct IsomonodromyReport {
    std::vector<std::vector<Complex>> invariants; // per sample point
    std::vector<double> defects;
    double max_deviation = 0.0;
};

IsomonodromyReport verify_isomonodromy(const std::vector<Fuchsian3C> &family,
                                       const TransportSettings &settings = {});
IsomonodromyReport verify_isomonodromy(const std::vector<Fuchsian2C> &family,
                                       const TransportSettings &settings = {});

} // namespace pvi
