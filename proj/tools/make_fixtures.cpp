// Writes the bundled data files: the Klein solution curve, the Klein family
// coefficients, and the three binary polyhedral groups.

#include "pvi/serialize.hpp"

#include <iostream>

using namespace pvi;

namespace {

Json klein_family_json() {
    // entries as rational functions of the family parameter s
    auto poly = [](std::initializer_list<long> ascending) {
        std::vector<Rational> c;
        for (long v : ascending) c.emplace_back(v);
        return PolynomialQ(std::move(c));
    };
    PolynomialQ q1 = poly({7, -7, 4});  // 4s^2-7s+7
    PolynomialQ q2 = poly({4, -7, 7});  // 7s^2-7s+4
    PolynomialQ q3 = poly({4, -1, 4});  // 4s^2-s+4
    PolynomialQ sv = poly({0, 1});
    PolynomialQ sm1 = poly({-1, 1});
    PolynomialQ c21 = poly({21});
    Json entries;
    entries["b12"] = to_json(RationalFunctionQ(poly({-22, 24, -21, 14}), c21 * sv * q1));
    entries["b13"] = to_json(RationalFunctionQ(poly({-14, 21, -24, 22}), c21 * q2));
    entries["b21"] = to_json(RationalFunctionQ(poly({5, 24, -21, 14}), c21 * sm1 * q3));
    entries["b23"] = to_json(RationalFunctionQ(poly({-5, 39, -42, 22}), c21 * q2));
    entries["b31"] = to_json(RationalFunctionQ(poly({14, -21, 24, 5}), c21 * sm1 * q3));
    entries["b32"] = to_json(RationalFunctionQ(poly({22, -42, 39, -5}), c21 * sv * q1));
    SpectralData3 sp = klein_spectral();
    Json j;
    j["lambda"] = Json::array({to_json(sp.lambda[0]), to_json(sp.lambda[1]),
                               to_json(sp.lambda[2])});
    j["mu"] = Json::array({to_json(sp.mu[0]), to_json(sp.mu[1]), to_json(sp.mu[2])});
    j["t"] = to_json(RationalFunctionQ(q2 * q2, sv * sv * sv * q1 * q1));
    j["entries"] = std::move(entries);
    return j;
}

} // namespace

int main(int argc, char **argv) {
    std::string dir = argc > 1 ? argv[1] : ".";
    try {
        save_json(to_json(klein_curve()), dir + "/klein_curve.json");
        save_json(klein_family_json(), dir + "/klein_family.json");
        for (auto [kind, name] :
             {std::pair{PolyhedralKind::tetrahedral, "tetrahedral"},
              std::pair{PolyhedralKind::octahedral, "octahedral"},
              std::pair{PolyhedralKind::icosahedral, "icosahedral"}})
            save_json(to_json(build_binary_polyhedral(kind)),
                      dir + "/group_" + name + ".json");
        // a concrete family member, ready for the monodromy and flow commands
        save_json(to_json(klein_family(Rational(2))), dir + "/klein_system_s2.json");
    } catch (const std::exception &e) {
        std::cerr << "fixture generation failed: " << e.what() << "\n";
        return 1;
    }
    std::cout << "fixtures written to " << dir << "\n";
    return 0;
}
