#include "pvi/serialize.hpp"

#include <fstream>

namespace pvi {

Json to_json(const Rational &q) { return rational_to_string(q); }

Rational rational_from_json(const Json &j) {
    if (j.is_number_integer()) return Rational(j.get<long>());
    return rational_from_string(j.get<std::string>());
}

Json to_json(const Complex &z) { return Json::array({z.real(), z.imag()}); }

Complex complex_from_json(const Json &j) {
    if (j.is_array()) return {j.at(0).get<double>(), j.at(1).get<double>()};
    if (j.is_string()) return to_complex(rational_from_string(j.get<std::string>()));
    return {j.get<double>(), 0.0};
}

Json to_json(const PolynomialQ &p) {
    Json arr = Json::array();
    for (const auto &c : p.coefficients()) arr.push_back(to_json(c));
    return arr;
}

PolynomialQ polynomial_from_json(const Json &j) {
    std::vector<Rational> coeffs;
    for (const auto &c : j) coeffs.push_back(rational_from_json(c));
    return PolynomialQ(std::move(coeffs));
}

Json to_json(const RationalFunctionQ &f) {
    return Json{{"num", to_json(f.num())}, {"den", to_json(f.den())}};
}

RationalFunctionQ rational_function_from_json(const Json &j) {
    return RationalFunctionQ(polynomial_from_json(j.at("num")),
                             polynomial_from_json(j.at("den")));
}

Json to_json(const ThetaVector &theta) {
    return Json::array({to_json(theta[0]), to_json(theta[1]), to_json(theta[2]),
                        to_json(theta[3])});
}

ThetaVector theta_from_json(const Json &j) {
    if (j.size() != 4) throw math_error("theta needs exactly four entries");
    return {rational_from_json(j.at(0)), rational_from_json(j.at(1)),
            rational_from_json(j.at(2)), rational_from_json(j.at(3))};
}

Json to_json(const SolutionCurve &curve) {
    return Json{{"theta", to_json(curve.theta)},
                {"y", to_json(curve.y)},
                {"t", to_json(curve.t)}};
}

SolutionCurve curve_from_json(const Json &j) {
    return SolutionCurve(rational_function_from_json(j.at("y")),
                         rational_function_from_json(j.at("t")),
                         theta_from_json(j.at("theta")));
}

Json to_json(const WeylWord &word) {
    Json arr = Json::array();
    for (auto g : word) arr.push_back(generator_name(g));
    return arr;
}

WeylWord word_from_json(const Json &j) {
    WeylWord word;
    for (const auto &g : j) word.push_back(generator_from_name(g.get<std::string>()));
    return word;
}

namespace {

Json matrix_to_json(const MatQ &m) {
    Json arr = Json::array();
    for (int i = 0; i < m.size(); ++i)
        for (int k = 0; k < m.size(); ++k) arr.push_back(to_json(m(i, k)));
    return arr;
}

Json matrix_to_json(const MatC &m) {
    Json arr = Json::array();
    for (int i = 0; i < m.size(); ++i)
        for (int k = 0; k < m.size(); ++k) arr.push_back(to_json(m(i, k)));
    return arr;
}

template <class M>
M matrix_from_json(const Json &j, int n) {
    if (static_cast<int>(j.size()) != n * n)
        throw math_error("matrix entry list has the wrong length");
    M m(n);
    int idx = 0;
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            if constexpr (std::is_same_v<M, MatQ>)
                m(i, k) = rational_from_json(j.at(idx));
            else
                m(i, k) = complex_from_json(j.at(idx));
            ++idx;
        }
    return m;
}

Json spectral_to_json(const SpectralData3 &sp) {
    return Json{{"lambda", Json::array({to_json(sp.lambda[0]), to_json(sp.lambda[1]),
                                        to_json(sp.lambda[2])})},
                {"mu", Json::array({to_json(sp.mu[0]), to_json(sp.mu[1]),
                                    to_json(sp.mu[2])})}};
}

SpectralData3 spectral_from_json(const Json &j) {
    auto three = [](const Json &arr) {
        return std::array<Rational, 3>{rational_from_json(arr.at(0)),
                                       rational_from_json(arr.at(1)),
                                       rational_from_json(arr.at(2))};
    };
    return SpectralData3(three(j.at("lambda")), three(j.at("mu")));
}

} // namespace

Json to_json(const Fuchsian3Q &sys) {
    Json j = spectral_to_json(sys.spectral);
    j["rank"] = 3;
    j["exact"] = true;
    j["t"] = to_json(sys.t);
    j["matrices"] = Json::array(
        {matrix_to_json(sys.B1), matrix_to_json(sys.B2), matrix_to_json(sys.B3)});
    return j;
}

Json to_json(const Fuchsian3C &sys) {
    Json j = spectral_to_json(sys.spectral);
    j["rank"] = 3;
    j["exact"] = false;
    j["t"] = to_json(sys.t);
    j["matrices"] = Json::array(
        {matrix_to_json(sys.B1), matrix_to_json(sys.B2), matrix_to_json(sys.B3)});
    return j;
}

Fuchsian3Q fuchsian3q_from_json(const Json &j) {
    const auto &ms = j.at("matrices");
    return {matrix_from_json<MatQ>(ms.at(0), 3), matrix_from_json<MatQ>(ms.at(1), 3),
            matrix_from_json<MatQ>(ms.at(2), 3), rational_from_json(j.at("t")),
            spectral_from_json(j)};
}

Fuchsian3C fuchsian3c_from_json(const Json &j) {
    const auto &ms = j.at("matrices");
    return {matrix_from_json<MatC>(ms.at(0), 3), matrix_from_json<MatC>(ms.at(1), 3),
            matrix_from_json<MatC>(ms.at(2), 3), complex_from_json(j.at("t")),
            spectral_from_json(j)};
}

Json to_json(const Fuchsian2Q &sys) {
    return Json{{"rank", 2},
                {"exact", true},
                {"t", to_json(sys.t)},
                {"theta", to_json(sys.theta)},
                {"matrices", Json::array({matrix_to_json(sys.A1), matrix_to_json(sys.A2),
                                          matrix_to_json(sys.A3)})}};
}

Json to_json(const Fuchsian2C &sys) {
    return Json{{"rank", 2},
                {"exact", false},
                {"t", to_json(sys.t)},
                {"theta", to_json(sys.theta)},
                {"matrices", Json::array({matrix_to_json(sys.A1), matrix_to_json(sys.A2),
                                          matrix_to_json(sys.A3)})}};
}

Fuchsian2Q fuchsian2q_from_json(const Json &j) {
    const auto &ms = j.at("matrices");
    return {matrix_from_json<MatQ>(ms.at(0), 2), matrix_from_json<MatQ>(ms.at(1), 2),
            matrix_from_json<MatQ>(ms.at(2), 2), rational_from_json(j.at("t")),
            theta_from_json(j.at("theta"))};
}

Fuchsian2C fuchsian2c_from_json(const Json &j) {
    const auto &ms = j.at("matrices");
    return {matrix_from_json<MatC>(ms.at(0), 2), matrix_from_json<MatC>(ms.at(1), 2),
            matrix_from_json<MatC>(ms.at(2), 2), complex_from_json(j.at("t")),
            theta_from_json(j.at("theta"))};
}

Json to_json(const FiniteGroup &group) {
    Json j{{"order", group.order}, {"table", group.table}};
    if (!group.labels.empty()) {
        Json labels = Json::array();
        for (const auto &l : group.labels)
            labels.push_back(Json::array({l[0], l[1], l[2], l[3]}));
        j["labels"] = std::move(labels);
    }
    return j;
}

FiniteGroup group_from_json(const Json &j) {
    FiniteGroup g = FiniteGroup::from_table(j.at("table").get<std::vector<int>>(),
                                            j.at("order").get<int>());
    if (j.contains("labels"))
        for (const auto &l : j.at("labels"))
            g.labels.push_back({l.at(0).get<std::string>(), l.at(1).get<std::string>(),
                                l.at(2).get<std::string>(), l.at(3).get<std::string>()});
    return g;
}

Json to_json(const BraidOrbit &orbit) {
    return Json{{"branches", orbit.branches},
                {"genus", orbit.genus},
                {"signature", orbit.signature},
                {"representative", orbit.representative},
                {"cycles_sigma0", orbit.cycles_sigma0},
                {"cycles_sigma1", orbit.cycles_sigma1},
                {"cycles_sigma_inf", orbit.cycles_sigma_inf}};
}

Json load_json(const std::string &path) {
    std::ifstream in(path);
    if (!in) throw math_error("cannot open " + path);
    Json j;
    in >> j;
    return j;
}

void save_json(const Json &j, const std::string &path) {
    std::ofstream out(path);
    if (!out) throw math_error("cannot write " + path);
    out << j.dump(2) << "\n";
}

} // namespace pvi
