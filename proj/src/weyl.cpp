#include "pvi/weyl.hpp"

#include <algorithm>
#include <array>
#include <map>

namespace pvi {

std::string generator_name(SymmetryGenerator g) {
    switch (g) {
    case SymmetryGenerator::R1: return "R1";
    case SymmetryGenerator::R2: return "R2";
    case SymmetryGenerator::R3: return "R3";
    case SymmetryGenerator::R4: return "R4";
    case SymmetryGenerator::R5: return "R5";
    case SymmetryGenerator::X1: return "X1";
    case SymmetryGenerator::X2: return "X2";
    case SymmetryGenerator::X3: return "X3";
    }
    return "?";
}

SymmetryGenerator generator_from_name(const std::string &name) {
    static const std::map<std::string, SymmetryGenerator> table = {
        {"R1", SymmetryGenerator::R1}, {"R2", SymmetryGenerator::R2},
        {"R3", SymmetryGenerator::R3}, {"R4", SymmetryGenerator::R4},
        {"R5", SymmetryGenerator::R5}, {"X1", SymmetryGenerator::X1},
        {"X2", SymmetryGenerator::X2}, {"X3", SymmetryGenerator::X3},
    };
    auto it = table.find(name);
    if (it == table.end()) throw math_error("unknown symmetry generator: " + name);
    return it->second;
}

ThetaVector apply_to_theta(SymmetryGenerator gen, const ThetaVector &th) {
    switch (gen) {
    case SymmetryGenerator::R1: return {-th[0], th[1], th[2], th[3]};
    case SymmetryGenerator::R2: return {th[0], -th[1], th[2], th[3]};
    case SymmetryGenerator::R3: return {th[0], th[1], -th[2], th[3]};
    case SymmetryGenerator::R4: return {th[0], th[1], th[2], Rational(2) - th[3]};
    case SymmetryGenerator::R5: {
        Rational d = th.delta();
        return {th[0] - d, th[1] - d, th[2] - d, th[3] - d};
    }
    case SymmetryGenerator::X1: return {th[2], th[1], th[0], th[3]};
    case SymmetryGenerator::X3: return {th[1], th[0], th[2], th[3]};
    case SymmetryGenerator::X2:
        return {th[3] - 1, th[1], th[2], th[0] + 1};
    }
    throw math_error("unreachable");
}

ThetaVector apply_word(const WeylWord &word, ThetaVector theta) {
    for (auto g : word) theta = apply_to_theta(g, theta);
    return theta;
}

SolutionCurve apply_to_solution(SymmetryGenerator gen, const SolutionCurve &curve) {
    using RF = RationalFunctionQ;
    const RF one{Rational(1)};
    ThetaVector th = apply_to_theta(gen, curve.theta);
    switch (gen) {
    case SymmetryGenerator::R1:
    case SymmetryGenerator::R2:
    case SymmetryGenerator::R3:
    case SymmetryGenerator::R4:
        return {curve.y, curve.t, th};
    case SymmetryGenerator::R5: {
        Rational d = curve.theta.delta();
        if (d == 0) return {curve.y, curve.t, th}; // reflection fixes the wall
        RF x = x_from_solution(curve);
        return {curve.y + RF(d) / x, curve.t, th};
    }
    case SymmetryGenerator::X1:
        return {one - curve.y, one - curve.t, th};
    case SymmetryGenerator::X3: {
        RF tm1 = curve.t - one;
        return {(curve.t - curve.y) / tm1, curve.t / tm1, th};
    }
    case SymmetryGenerator::X2: {
        if (curve.y.is_zero())
            throw degenerate_parameterization("X2 on an identically zero y");
        return {one / curve.y, one / curve.t, th};
    }
    }
    throw math_error("unreachable");
}

SolutionCurve apply_word(const WeylWord &word, SolutionCurve curve) {
    for (auto g : word) curve = apply_to_solution(g, curve);
    return curve;
}

bool in_closed_alcove(const ThetaVector &th) {
    return th[0] <= 0 && th[1] <= 0 && th[2] <= 0 && th[3] <= 1 &&
           th[0] + th[1] + th[2] + th[3] >= 0;
}

AlcoveRepresentative reduce_to_alcove(const ThetaVector &theta) {
    AlcoveRepresentative rep{theta, {}};
    // reflect across the first strictly violated wall; terminates because
    // each step lowers the number of arrangement hyperplanes separating the
    // point from the alcove
    for (long guard = 0;; ++guard) {
        if (guard > 1000000) throw math_error("alcove reduction failed to terminate");
        SymmetryGenerator g;
        if (rep.theta[0] > 0) g = SymmetryGenerator::R1;
        else if (rep.theta[1] > 0) g = SymmetryGenerator::R2;
        else if (rep.theta[2] > 0) g = SymmetryGenerator::R3;
        else if (rep.theta[3] > 1) g = SymmetryGenerator::R4;
        else if (rep.theta.delta() < 0) g = SymmetryGenerator::R5;
        else break;
        rep.theta = apply_to_theta(g, rep.theta);
        rep.word.push_back(g);
    }
    return rep;
}

namespace {

// Words over {X1, X2, X3} realizing each permutation of the value vector
// (th1, th2, th3, th4-1); X3 = (12), X1 = (13), X2 = (14).
using Perm4 = std::array<int, 4>;

// word action on value vectors: v -> v . a, appending a generator composes
// on the right
Perm4 compose(const Perm4 &a, const Perm4 &b) {
    Perm4 r;
    for (size_t i = 0; i < 4; ++i) r[i] = a[static_cast<size_t>(b[i])];
    return r;
}

const std::map<Perm4, WeylWord> &value_permutation_words() {
    static const std::map<Perm4, WeylWord> table = [] {
        std::map<Perm4, WeylWord> words;
        const std::array<std::pair<Perm4, SymmetryGenerator>, 3> gens = {{
            {{1, 0, 2, 3}, SymmetryGenerator::X3},
            {{2, 1, 0, 3}, SymmetryGenerator::X1},
            {{3, 1, 2, 0}, SymmetryGenerator::X2},
        }};
        words[{0, 1, 2, 3}] = {};
        std::vector<Perm4> frontier{{0, 1, 2, 3}};
        while (!frontier.empty()) {
            std::vector<Perm4> next;
            for (const auto &p : frontier)
                for (const auto &[gp, g] : gens) {
                    Perm4 q = compose(p, gp);
                    if (words.count(q)) continue;
                    WeylWord w = words[p];
                    w.push_back(g);
                    words[q] = std::move(w);
                    next.push_back(q);
                }
            frontier = std::move(next);
        }
        return words;
    }();
    return table;
}

} // namespace

AlcoveRepresentative f4_canonical_form(const ThetaVector &theta) {
    std::optional<AlcoveRepresentative> best;
    for (const auto &[perm, word] : value_permutation_words()) {
        ThetaVector permuted = apply_word(word, theta);
        AlcoveRepresentative red = reduce_to_alcove(permuted);
        WeylWord full = word;
        full.insert(full.end(), red.word.begin(), red.word.end());
        if (!best || red.theta < best->theta)
            best = AlcoveRepresentative{red.theta, std::move(full)};
    }
    return *best;
}

std::optional<WeylWord> f4_equivalent(const ThetaVector &a, const ThetaVector &b) {
    AlcoveRepresentative ca = f4_canonical_form(a);
    AlcoveRepresentative cb = f4_canonical_form(b);
    if (!(ca.theta == cb.theta)) return std::nullopt;
    // every generator is an involution, so the inverse word is the reverse
    WeylWord witness = ca.word;
    witness.insert(witness.end(), cb.word.rbegin(), cb.word.rend());
    return witness;
}

} // namespace pvi
