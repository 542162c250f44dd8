#include "pvi/schlesinger.hpp"

#include "pvi/detail/dopri.hpp"

namespace pvi {

std::array<MatC, 3> schlesinger_rhs(const MatC &b1, const MatC &b2, const MatC &b3,
                                    const Complex &t) {
    if (t == Complex(0.0) || t == Complex(1.0))
        throw degenerate_parameterization("schlesinger_rhs at singular t");
    Complex inv_t = Complex(1.0) / t;
    Complex inv_tm1 = Complex(1.0) / (t - Complex(1.0));
    MatC c21 = commutator(b2, b1);
    MatC c32 = commutator(b3, b2);
    return {c21 * inv_t, (-c21) * inv_t + c32 * inv_tm1, (-c32) * inv_tm1};
}

std::vector<PathPiece> plan_t_path(const Complex &from, const Complex &to,
                                   double clearance) {
    std::vector<PathPiece> pieces;
    struct Cut {
        double tau_in, tau_out;
        Complex center;
    };
    std::vector<Cut> cuts;
    Complex d = to - from;
    double len2 = std::norm(d);
    if (len2 == 0.0) return pieces;
    for (Complex s : {Complex(0.0), Complex(1.0)}) {
        // segment-circle intersection around s
        Complex rel = from - s;
        double b = 2.0 * (rel * std::conj(d)).real();
        double c = std::norm(rel) - clearance * clearance;
        double disc = b * b - 4.0 * len2 * c;
        if (disc <= 0.0) continue;
        double sq = std::sqrt(disc);
        double t1 = (-b - sq) / (2.0 * len2), t2 = (-b + sq) / (2.0 * len2);
        if (t2 <= 0.0 || t1 >= 1.0) continue;
        if (t1 < 0.0 || t2 > 1.0)
            throw degenerate_parameterization("t-path endpoint too close to 0 or 1");
        cuts.push_back({t1, t2, s});
    }
    std::sort(cuts.begin(), cuts.end(),
              [](const Cut &a, const Cut &b) { return a.tau_in < b.tau_in; });
    if (cuts.size() == 2 && cuts[1].tau_in < cuts[0].tau_out)
        throw degenerate_parameterization("detour circles overlap; reduce the clearance");
    double tau = 0.0;
    for (const auto &cut : cuts) {
        Complex enter = from + d * cut.tau_in;
        Complex leave = from + d * cut.tau_out;
        pieces.push_back(PathPiece::line(from + d * tau, enter));
        double a0 = std::arg(enter - cut.center), a1 = std::arg(leave - cut.center);
        double sweep = a1 - a0;
        while (sweep > M_PI) sweep -= 2.0 * M_PI;
        while (sweep < -M_PI) sweep += 2.0 * M_PI;
        pieces.push_back(PathPiece::circle_arc(cut.center, clearance, a0, a0 + sweep));
        tau = cut.tau_out;
    }
    pieces.push_back(PathPiece::line(from + d * tau, to));
    return pieces;
}

namespace {

// packed residue triple, the flow state
struct ResidueTriple {
    MatC b1, b2, b3;

    ResidueTriple operator+(const ResidueTriple &o) const {
        return {b1 + o.b1, b2 + o.b2, b3 + o.b3};
    }
    ResidueTriple operator*(const Complex &c) const {
        return {b1 * c, b2 * c, b3 * c};
    }
};

double triple_norm(const ResidueTriple &t) {
    return std::max({max_abs(t.b1), max_abs(t.b2), max_abs(t.b3)});
}

ResidueTriple flow_residues(ResidueTriple state, const Complex &from, const Complex &to,
                            const FlowSettings &settings) {
    auto pieces = plan_t_path(from, to, settings.clearance);
    long steps = 0;
    for (const auto &piece : pieces) {
        auto rhs = [&piece](double tau, const ResidueTriple &y) {
            Complex t = piece.at(tau);
            auto der = schlesinger_rhs(y.b1, y.b2, y.b3, t);
            Complex vel = piece.velocity(tau);
            return ResidueTriple{der[0] * vel, der[1] * vel, der[2] * vel};
        };
        state = detail::dopri_integrate(rhs, std::move(state), 0.0, 1.0, settings.tol,
                                        steps, settings.max_steps, triple_norm);
    }
    return state;
}

} // namespace

Fuchsian3C flow(const Fuchsian3C &state, const Complex &t_target,
                const FlowSettings &settings) {
    ResidueTriple r{state.B1, state.B2, state.B3};
    r = flow_residues(std::move(r), state.t, t_target, settings);
    return {r.b1, r.b2, r.b3, t_target, state.spectral};
}

Fuchsian2C flow(const Fuchsian2C &state, const Complex &t_target,
                const FlowSettings &settings) {
    ResidueTriple r{state.A1, state.A2, state.A3};
    r = flow_residues(std::move(r), state.t, t_target, settings);
    return {r.b1, r.b2, r.b3, t_target, state.theta};
}

std::vector<QuadratureState> quadratures(const std::vector<Complex> &y_path,
                                         const std::vector<Complex> &x_path,
                                         const ThetaVector &theta,
                                         const std::vector<Complex> &t_path) {
    size_t n = t_path.size();
    if (y_path.size() != n || x_path.size() != n || n < 2)
        throw math_error("quadratures needs matching paths with >= 2 samples");
    Complex th4 = to_complex(theta[3]);
    Complex delta = to_complex(theta.delta());
    auto rhs_k = [&](size_t i) {
        const Complex &t = t_path[i];
        return (th4 - 1.0) * (y_path[i] - t) / (t * (t - 1.0));
    };
    auto rhs_l = [&](size_t i) {
        const Complex &t = t_path[i];
        Complex p = p_from_x(x_path[i], y_path[i], t, theta);
        if (std::abs(p) < 1e-12)
            throw degenerate_parameterization("p vanishes along the quadrature path");
        return (delta - 1.0) / (t * (t - 1.0)) * (y_path[i] - t - (delta - th4) / p);
    };
    std::vector<QuadratureState> out(n);
    for (size_t i = 1; i < n; ++i) {
        Complex dt = t_path[i] - t_path[i - 1];
        out[i].log_k = out[i - 1].log_k + dt * (rhs_k(i - 1) + rhs_k(i)) / 2.0;
        out[i].log_l = out[i - 1].log_l + dt * (rhs_l(i - 1) + rhs_l(i)) / 2.0;
    }
    return out;
}

namespace {

template <class Sys>
IsomonodromyReport verify_impl(const std::vector<Sys> &family,
                               const TransportSettings &settings) {
    if (family.size() < 2)
        throw math_error("verify_isomonodromy needs at least two sample points");
    IsomonodromyReport report;
    for (const auto &sys : family) {
        MonodromyRep rep = monodromy_rep(sys, settings);
        report.invariants.push_back(monodromy_invariants(rep));
        report.defects.push_back(rep.defect);
    }
    const auto &ref = report.invariants.front();
    for (const auto &inv : report.invariants)
        for (size_t k = 0; k < ref.size(); ++k)
            report.max_deviation = std::max(report.max_deviation,
                                            std::abs(inv[k] - ref[k]));
    return report;
}

} // namespace

IsomonodromyReport verify_isomonodromy(const std::vector<Fuchsian3C> &family,
                                       const TransportSettings &settings) {
    return verify_impl(family, settings);
}

IsomonodromyReport verify_isomonodromy(const std::vector<Fuchsian2C> &family,
                                       const TransportSettings &settings) {
    return verify_impl(family, settings);
}

} // namespace pvi
