#pragma once

#include "pvi/braid.hpp"
#include "pvi/fuchsian.hpp"
#include "pvi/weyl.hpp"

#include <json.hpp>

namespace pvi {

using Json = nlohmann::json;

Json to_json(const Rational &q);
Rational rational_from_json(const Json &j);

Json to_json(const Complex &z);
Complex complex_from_json(const Json &j);

Json to_json(const PolynomialQ &p);
PolynomialQ polynomial_from_json(const Json &j);

Json to_json(const RationalFunctionQ &f);
RationalFunctionQ rational_function_from_json(const Json &j);

Json to_json(const ThetaVector &theta);
ThetaVector theta_from_json(const Json &j);

Json to_json(const SolutionCurve &curve);
SolutionCurve curve_from_json(const Json &j);

Json to_json(const WeylWord &word);
WeylWord word_from_json(const Json &j);

Json to_json(const Fuchsian3Q &sys);
Json to_json(const Fuchsian3C &sys);
Fuchsian3Q fuchsian3q_from_json(const Json &j);
Fuchsian3C fuchsian3c_from_json(const Json &j);

Json to_json(const Fuchsian2Q &sys);
Json to_json(const Fuchsian2C &sys);
Fuchsian2Q fuchsian2q_from_json(const Json &j);
Fuchsian2C fuchsian2c_from_json(const Json &j);

Json to_json(const FiniteGroup &group);
FiniteGroup group_from_json(const Json &j);

Json to_json(const BraidOrbit &orbit);

Json load_json(const std::string &path);
void save_json(const Json &j, const std::string &path);

} // namespace pvi
