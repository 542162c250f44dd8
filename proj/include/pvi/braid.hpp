#pragma once

#include "pvi/golden.hpp"
#include "pvi/monodromy.hpp"

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace pvi {

// Quaternion over an exact coordinate ring.
template <class R>
struct Quaternion {
    R w{0}, x{0}, y{0}, z{0};

    bool operator==(const Quaternion &o) const {
        return w == o.w && x == o.x && y == o.y && z == o.z;
    }
    bool operator<(const Quaternion &o) const {
        if (!(w == o.w)) return w < o.w;
        if (!(x == o.x)) return x < o.x;
        if (!(y == o.y)) return y < o.y;
        return z < o.z;
    }
    Quaternion operator*(const Quaternion &o) const {
        return {w * o.w - x * o.x - y * o.y - z * o.z,
                w * o.x + x * o.w + y * o.z - z * o.y,
                w * o.y - x * o.z + y * o.w + z * o.x,
                w * o.z + x * o.y - y * o.x + z * o.w};
    }
};

using QuatQ = Quaternion<Rational>;
using QuatGolden = Quaternion<GoldenRational>;

// Finite group as a multiplication table with conjugacy data. Built either
// from exact quaternion models or from a numerically closed GroupTable.
struct FiniteGroup {
    int order = 0;
    std::vector<int> table;   // row-major order x order
    std::vector<int> inverse;
    std::vector<int> cls;     // conjugacy class id per element
    int num_classes = 0;
    int identity = 0;
    std::vector<std::array<std::string, 4>> labels; // optional exact coordinates

    int mul(int i, int j) const { return table[static_cast<size_t>(i) * order + j]; }
    int inv(int i) const { return inverse[static_cast<size_t>(i)]; }
    int conj(int g, int m) const { return mul(mul(g, m), inv(g)); }
    int element_order(int g) const;
    std::vector<int> center() const;

    static FiniteGroup from_table(std::vector<int> table, int order);
    static FiniteGroup from_group_table(const GroupTable &gt);
};

enum class PolyhedralKind { tetrahedral, octahedral, icosahedral };

// Binary tetrahedral / octahedral / icosahedral groups (orders 24/48/120)
// from exact unit quaternions; icosahedral coordinates live in the golden
// field.
FiniteGroup build_binary_polyhedral(PolyhedralKind kind);

PolyhedralKind polyhedral_kind_from_name(const std::string &name);

// Monodromy tuple (M1..M4) with M4 implied by M4 M3 M2 M1 = 1, stored as
// the triple of group indices.
using Triple = std::array<int, 3>;

int implied_m4(const FiniteGroup &g, const Triple &t);

// omega_i acts on (M_i, M_{i+1}) as (M_{i+1}, M_{i+1} M_i M_{i+1}^{-1});
// i = 3 touches the implied entry. The pure braid generators are w_i = omega_i^2.
Triple omega_action(const FiniteGroup &g, int i, const Triple &t);
Triple braid_w(const FiniteGroup &g, int i, const Triple &t); // omega_i squared

// lexicographic minimum over simultaneous conjugation
Triple canonical_triple(const FiniteGroup &g, const Triple &t);

bool triple_generates(const FiniteGroup &g, const Triple &t);

// Number of conjugacy classes of ordered generating triples, by cubic
// enumeration with subgroup-closure memoization (Burnside over the center).
long count_generating_triples(const FiniteGroup &g);

// Independent route: ordered generating triples by Moebius inversion over
// the subgroup lattice, reduced by the same Burnside factor.
long count_generating_triples_mobius(const FiniteGroup &g);

struct BraidOrbit {
    Triple representative;
    int branches = 0;
    int genus = 0;
    std::array<int, 4> signature{}; // conjugacy classes of M1..M3 and M4
    std::vector<Triple> members;    // canonical forms
    std::vector<int> sigma0, sigma1; // action of w1, w2 on members
    std::vector<int> cycles_sigma0, cycles_sigma1, cycles_sigma_inf;

    bool contains(const Triple &canonical) const;
};

// 2 - 2g = 2N - sum over the three permutations of (N - #cycles)
int riemann_hurwitz_genus(int branches, const std::vector<int> &sigma0,
                          const std::vector<int> &sigma1);

// orbit of one tuple under <w1, w2>
BraidOrbit orbit_of(const FiniteGroup &g, const Triple &seed);

// All orbits over the generating triples (groups of modest order). The
// optional filter restricts to orbits whose entries lie in the given
// conjugacy classes (classes of M1, M2, M3 and the implied M4).
std::vector<BraidOrbit> enumerate_orbits(const FiniteGroup &g);
std::vector<BraidOrbit> enumerate_orbits(const FiniteGroup &g,
                                         const std::array<int, 4> &signature);

} // namespace pvi
