#pragma once

#include "pvi/pvi_core.hpp"

#include <optional>
#include <string>
#include <vector>

namespace pvi {

// Generators of the PVI symmetry group: R1..R5 generate the affine Weyl
// group of type D4(-), adding X1, X2, X3 extends it to affine F4.
enum class SymmetryGenerator { R1, R2, R3, R4, R5, X1, X2, X3 };

// Free word, applied left to right.
using WeylWord = std::vector<SymmetryGenerator>;

std::string generator_name(SymmetryGenerator g);
SymmetryGenerator generator_from_name(const std::string &name);

ThetaVector apply_to_theta(SymmetryGenerator gen, const ThetaVector &theta);
ThetaVector apply_word(const WeylWord &word, ThetaVector theta);

// Action on solutions: transforms (y, t, theta) so that zero residuals are
// preserved. R5 needs the conjugate coordinate x (Riccati curves rejected).
SolutionCurve apply_to_solution(SymmetryGenerator gen, const SolutionCurve &curve);
SolutionCurve apply_word(const WeylWord &word, SolutionCurve curve);

// Representative in the closed fundamental alcove
//   th1 <= 0, th2 <= 0, th3 <= 0, th4 <= 1, sum(th) >= 0
// together with a word mapping the input to it.
struct AlcoveRepresentative {
    ThetaVector theta;
    WeylWord word;
};

bool in_closed_alcove(const ThetaVector &theta);
AlcoveRepresentative reduce_to_alcove(const ThetaVector &theta);

// Decides affine-F4 equivalence of parameters via a canonical form:
// reduce each of the 24 value-permuted copies (S4 on {th1,th2,th3,th4-1})
// and take the lexicographic minimum. Returns a witness word on success.
std::optional<WeylWord> f4_equivalent(const ThetaVector &a, const ThetaVector &b);

// Canonical alcove form minimized over the S4 value permutations.
AlcoveRepresentative f4_canonical_form(const ThetaVector &theta);

} // namespace pvi
