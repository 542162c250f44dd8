#include "pvi/braid.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <unordered_map>

namespace pvi {

int FiniteGroup::element_order(int g) const {
    int k = 1, cur = g;
    while (cur != identity) {
        cur = mul(cur, g);
        ++k;
        if (k > order) throw math_error("element order exceeds group order");
    }
    return k;
}

std::vector<int> FiniteGroup::center() const {
    std::vector<int> z;
    for (int g = 0; g < order; ++g) {
        bool central = true;
        for (int h = 0; h < order && central; ++h)
            if (mul(g, h) != mul(h, g)) central = false;
        if (central) z.push_back(g);
    }
    return z;
}

FiniteGroup FiniteGroup::from_table(std::vector<int> table, int order) {
    FiniteGroup g;
    g.order = order;
    g.table = std::move(table);
    if (g.table.size() != static_cast<size_t>(order) * order)
        throw math_error("group table has the wrong size");

    // rows and columns must be permutations
    for (int i = 0; i < order; ++i) {
        std::vector<bool> seen_row(static_cast<size_t>(order)),
            seen_col(static_cast<size_t>(order));
        for (int j = 0; j < order; ++j) {
            int r = g.mul(i, j), c = g.mul(j, i);
            if (r < 0 || r >= order || c < 0 || c >= order || seen_row[static_cast<size_t>(r)] ||
                seen_col[static_cast<size_t>(c)])
                throw math_error("group table is not a Latin square");
            seen_row[static_cast<size_t>(r)] = true;
            seen_col[static_cast<size_t>(c)] = true;
        }
    }
    g.identity = -1;
    for (int e = 0; e < order && g.identity < 0; ++e) {
        bool ok = true;
        for (int j = 0; j < order && ok; ++j)
            if (g.mul(e, j) != j || g.mul(j, e) != j) ok = false;
        if (ok) g.identity = e;
    }
    if (g.identity < 0) throw math_error("group table has no identity");
    g.inverse.assign(static_cast<size_t>(order), -1);
    for (int i = 0; i < order; ++i)
        for (int j = 0; j < order; ++j)
            if (g.mul(i, j) == g.identity) g.inverse[static_cast<size_t>(i)] = j;
    for (int i = 0; i < order; ++i)
        if (g.inverse[static_cast<size_t>(i)] < 0)
            throw math_error("group table has a non-invertible element");

    g.cls.assign(static_cast<size_t>(order), -1);
    int next = 0;
    for (int i = 0; i < order; ++i) {
        if (g.cls[static_cast<size_t>(i)] >= 0) continue;
        for (int h = 0; h < order; ++h) g.cls[static_cast<size_t>(g.conj(h, i))] = next;
        ++next;
    }
    g.num_classes = next;
    return g;
}

FiniteGroup FiniteGroup::from_group_table(const GroupTable &gt) {
    return from_table(gt.table, gt.order);
}

namespace {

// breadth-first closure with exact element equality
template <class E>
std::vector<E> close_exact(const std::vector<E> &gens, const E &id, size_t bound) {
    std::vector<E> elems{id};
    auto find = [&](const E &e) -> int {
        for (size_t i = 0; i < elems.size(); ++i)
            if (elems[i] == e) return static_cast<int>(i);
        return -1;
    };
    for (const auto &gen : gens)
        if (find(gen) < 0) elems.push_back(gen);
    for (size_t cursor = 0; cursor < elems.size(); ++cursor) {
        for (const auto &gen : gens) {
            E prod = elems[cursor] * gen;
            if (find(prod) < 0) {
                elems.push_back(prod);
                if (elems.size() > bound)
                    throw math_error("exact closure exceeded the expected order");
            }
        }
    }
    return elems;
}

template <class E>
std::vector<int> multiplication_table(const std::vector<E> &elems) {
    int n = static_cast<int>(elems.size());
    std::map<E, int> where;
    for (int k = 0; k < n; ++k) where.emplace(elems[static_cast<size_t>(k)], k);
    std::vector<int> table(static_cast<size_t>(n) * n, -1);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            E prod = elems[static_cast<size_t>(i)] * elems[static_cast<size_t>(j)];
            auto it = where.find(prod);
            if (it == where.end())
                throw math_error("closure is not multiplication-closed");
            table[static_cast<size_t>(i) * n + j] = it->second;
        }
    return table;
}

std::string signed_term(const Rational &b, const char *symbol) {
    if (b == 1) return std::string("+") + symbol;
    if (b == -1) return std::string("-") + symbol;
    std::string s = rational_to_string(b);
    if (s[0] != '-') s = "+" + s;
    return s + "*" + symbol;
}

std::string quad_coordinate(const Rational &a, const Rational &b, const char *symbol) {
    if (b == 0) return rational_to_string(a);
    if (a == 0) {
        std::string t = signed_term(b, symbol);
        return t[0] == '+' ? t.substr(1) : t;
    }
    return rational_to_string(a) + signed_term(b, symbol);
}

// element of the binary octahedral group written as q * s^f with
// s = (1+i)/sqrt(2); conjugation by s keeps rational quaternions rational
// and s^2 = i, so the pair (q, f) multiplies exactly over Q
struct OctElement {
    QuatQ q;
    int f = 0;

    bool operator==(const OctElement &o) const { return f == o.f && q == o.q; }
    bool operator<(const OctElement &o) const {
        return f != o.f ? f < o.f : q < o.q;
    }

    static QuatQ conj_by_sigma(const QuatQ &v) {
        QuatQ plus{Rational(1), Rational(1), Rational(0), Rational(0)};
        QuatQ minus{Rational(1), Rational(-1), Rational(0), Rational(0)};
        QuatQ r = plus * v * minus;
        return {r.w / 2, r.x / 2, r.y / 2, r.z / 2};
    }

    OctElement operator*(const OctElement &o) const {
        QuatQ rhs = f == 1 ? conj_by_sigma(o.q) : o.q;
        QuatQ prod = q * rhs;
        int ff = f + o.f;
        if (ff == 2) {
            prod = prod * QuatQ{Rational(0), Rational(1), Rational(0), Rational(0)};
            ff = 0;
        }
        return {prod, ff};
    }
};

std::array<std::string, 4> label_of(const QuatQ &q) {
    return {rational_to_string(q.w), rational_to_string(q.x), rational_to_string(q.y),
            rational_to_string(q.z)};
}

std::array<std::string, 4> label_of(const QuatGolden &q) {
    auto fmt = [](const GoldenRational &g) { return quad_coordinate(g.a, g.b, "phi"); };
    return {fmt(q.w), fmt(q.x), fmt(q.y), fmt(q.z)};
}

std::array<std::string, 4> label_of(const OctElement &e) {
    if (e.f == 0) return label_of(e.q);
    // q * (1+i)/sqrt2 = q(1+i) * sqrt2/2
    QuatQ r = e.q * QuatQ{Rational(1), Rational(1), Rational(0), Rational(0)};
    auto fmt = [](const Rational &c) {
        return quad_coordinate(Rational(0), c / 2, "sqrt2");
    };
    return {fmt(r.w), fmt(r.x), fmt(r.y), fmt(r.z)};
}

template <class E>
FiniteGroup group_from_elements(const std::vector<E> &elems) {
    FiniteGroup g = FiniteGroup::from_table(multiplication_table(elems),
                                            static_cast<int>(elems.size()));
    g.labels.reserve(elems.size());
    for (const auto &e : elems) g.labels.push_back(label_of(e));
    return g;
}

} // namespace

PolyhedralKind polyhedral_kind_from_name(const std::string &name) {
    if (name == "tetrahedral") return PolyhedralKind::tetrahedral;
    if (name == "octahedral") return PolyhedralKind::octahedral;
    if (name == "icosahedral") return PolyhedralKind::icosahedral;
    throw math_error("unknown polyhedral kind: " + name);
}

FiniteGroup build_binary_polyhedral(PolyhedralKind kind) {
    switch (kind) {
    case PolyhedralKind::tetrahedral: {
        QuatQ id{Rational(1), Rational(0), Rational(0), Rational(0)};
        QuatQ i{Rational(0), Rational(1), Rational(0), Rational(0)};
        QuatQ omega{Rational(1, 2), Rational(1, 2), Rational(1, 2), Rational(1, 2)};
        auto elems = close_exact<QuatQ>({i, omega}, id, 24);
        if (elems.size() != 24) throw math_error("binary tetrahedral closure is not 24");
        return group_from_elements(elems);
    }
    case PolyhedralKind::octahedral: {
        OctElement id{{Rational(1), Rational(0), Rational(0), Rational(0)}, 0};
        OctElement i{{Rational(0), Rational(1), Rational(0), Rational(0)}, 0};
        OctElement omega{{Rational(1, 2), Rational(1, 2), Rational(1, 2), Rational(1, 2)}, 0};
        OctElement sigma{{Rational(1), Rational(0), Rational(0), Rational(0)}, 1};
        auto elems = close_exact<OctElement>({i, omega, sigma}, id, 48);
        if (elems.size() != 48) throw math_error("binary octahedral closure is not 48");
        return group_from_elements(elems);
    }
    case PolyhedralKind::icosahedral: {
        using G = GoldenRational;
        QuatGolden id{G(Rational(1)), G(Rational(0)), G(Rational(0)), G(Rational(0))};
        QuatGolden s{G(Rational(1, 2)), G(Rational(1, 2)), G(Rational(1, 2)),
                     G(Rational(1, 2))};
        // (phi + (phi-1) i + j)/2
        QuatGolden tq{G(Rational(0), Rational(1, 2)), G(Rational(-1, 2), Rational(1, 2)),
                      G(Rational(1, 2)), G(Rational(0))};
        auto elems = close_exact<QuatGolden>({s, tq}, id, 120);
        if (elems.size() != 120) throw math_error("binary icosahedral closure is not 120");
        return group_from_elements(elems);
    }
    }
    throw math_error("unreachable");
}

int implied_m4(const FiniteGroup &g, const Triple &t) {
    return g.inv(g.mul(g.mul(t[2], t[1]), t[0]));
}

Triple omega_action(const FiniteGroup &g, int i, const Triple &t) {
    switch (i) {
    case 1: return {t[1], g.conj(t[1], t[0]), t[2]};
    case 2: return {t[0], t[2], g.conj(t[2], t[1])};
    case 3: return {t[0], t[1], implied_m4(g, t)};
    default: throw math_error("omega index must be 1, 2 or 3");
    }
}

Triple braid_w(const FiniteGroup &g, int i, const Triple &t) {
    return omega_action(g, i, omega_action(g, i, t));
}

Triple canonical_triple(const FiniteGroup &g, const Triple &t) {
    Triple best = t;
    for (int h = 0; h < g.order; ++h) {
        int a = g.conj(h, t[0]);
        if (a > best[0]) continue;
        int b = g.conj(h, t[1]);
        if (a == best[0] && b > best[1]) continue;
        int c = g.conj(h, t[2]);
        Triple cand{a, b, c};
        if (cand < best) best = cand;
    }
    return best;
}

namespace {

// Subgroup lattice helpers: subgroups as bitsets over element indices,
// memoized pair closures and one-element extensions.
class SubgroupOracle {
public:
    explicit SubgroupOracle(const FiniteGroup &g)
        : g_(g), words_((static_cast<size_t>(g.order) + 63) / 64),
          pair_memo_(static_cast<size_t>(g.order) * g.order, -1) {}

    int pair_subgroup(int a, int b) {
        size_t key = static_cast<size_t>(a) * g_.order + b;
        int id = pair_memo_[key];
        if (id < 0) {
            id = intern(closure({a, b}), {a, b});
            pair_memo_[key] = id;
        }
        return id;
    }

    bool subgroup_is_whole(int id) const {
        return members_[static_cast<size_t>(id)].size() == static_cast<size_t>(g_.order);
    }

    bool contains(int id, int element) const {
        const auto &bits = bits_[static_cast<size_t>(id)];
        return (bits[static_cast<size_t>(element) / 64] >>
                (static_cast<size_t>(element) % 64)) & 1;
    }

    bool extend_generates(int id, int c) {
        if (subgroup_is_whole(id)) return true;
        if (contains(id, c)) return false;
        auto &memo = extend_memo_[static_cast<size_t>(id)];
        if (memo.empty()) memo.assign(static_cast<size_t>(g_.order), -1);
        int8_t &slot = memo[static_cast<size_t>(c)];
        if (slot < 0) {
            auto gens = witness_[static_cast<size_t>(id)];
            gens.push_back(c);
            slot = closure_size(gens) == static_cast<size_t>(g_.order) ? 1 : 0;
        }
        return slot == 1;
    }

    bool triple_generates(const Triple &t) {
        return extend_generates(pair_subgroup(t[0], t[1]), t[2]);
    }

private:
    using Bits = std::vector<uint64_t>;

    Bits closure(const std::vector<int> &gens) {
        members_scratch_.clear();
        Bits bits(words_, 0);
        auto add = [&](int e) {
            uint64_t &w = bits[static_cast<size_t>(e) / 64];
            uint64_t mask = uint64_t(1) << (static_cast<size_t>(e) % 64);
            if (w & mask) return false;
            w |= mask;
            members_scratch_.push_back(e);
            return true;
        };
        add(g_.identity);
        for (int e : gens) add(e);
        for (size_t cur = 0; cur < members_scratch_.size(); ++cur)
            for (int e : gens) add(g_.mul(members_scratch_[cur], e));
        return bits;
    }

    size_t closure_size(const std::vector<int> &gens) {
        closure(gens);
        return members_scratch_.size();
    }

    int intern(Bits bits, std::vector<int> gens) {
        auto it = ids_.find(bits);
        if (it != ids_.end()) return it->second;
        int id = static_cast<int>(bits_.size());
        ids_.emplace(bits, id);
        bits_.push_back(std::move(bits));
        members_.push_back(members_scratch_);
        witness_.push_back(std::move(gens));
        extend_memo_.emplace_back();
        return id;
    }

    const FiniteGroup &g_;
    size_t words_;
    std::vector<int> pair_memo_;
    std::map<Bits, int> ids_;
    std::vector<Bits> bits_;
    std::vector<std::vector<int>> members_;
    std::vector<std::vector<int>> witness_;
    std::vector<std::vector<int8_t>> extend_memo_;
    std::vector<int> members_scratch_;
};

long ordered_generating_triples(const FiniteGroup &g, SubgroupOracle &oracle) {
    long count = 0;
    for (int a = 0; a < g.order; ++a)
        for (int b = 0; b < g.order; ++b) {
            int pid = oracle.pair_subgroup(a, b);
            for (int c = 0; c < g.order; ++c)
                if (oracle.extend_generates(pid, c)) ++count;
        }
    return count;
}

long reduce_by_center(const FiniteGroup &g, long ordered) {
    // conjugation fixes a generating triple only for central elements, so
    // Burnside gives ordered * |Z| / |G| classes
    long z = static_cast<long>(g.center().size());
    long num = ordered * z;
    if (num % g.order != 0)
        throw math_error("generating triple count is not divisible as expected");
    return num / g.order;
}

} // namespace

bool triple_generates(const FiniteGroup &g, const Triple &t) {
    SubgroupOracle oracle(g);
    return oracle.triple_generates(t);
}

long count_generating_triples(const FiniteGroup &g) {
    if (g.order > 400)
        throw math_error("count_generating_triples: order too large for cubic scan");
    SubgroupOracle oracle(g);
    return reduce_by_center(g, ordered_generating_triples(g, oracle));
}

long count_generating_triples_mobius(const FiniteGroup &g) {
    if (g.order > 400)
        throw math_error("count_generating_triples_mobius: order too large");
    using Bits = std::vector<uint64_t>;
    size_t words = (static_cast<size_t>(g.order) + 63) / 64;

    auto closure_from = [&](std::vector<int> seed) {
        Bits bits(words, 0);
        std::vector<int> members;
        auto add = [&](int e) {
            uint64_t &w = bits[static_cast<size_t>(e) / 64];
            uint64_t mask = uint64_t(1) << (static_cast<size_t>(e) % 64);
            if (w & mask) return;
            w |= mask;
            members.push_back(e);
        };
        add(g.identity);
        for (int e : seed) add(e);
        for (size_t cur = 0; cur < members.size(); ++cur)
            for (int e : seed) add(g.mul(members[cur], e));
        return std::make_pair(bits, members);
    };

    // enumerate the full subgroup lattice by closing subgroups with one
    // extra generator until stable
    std::map<Bits, std::vector<int>> subgroups; // bits -> generating witness
    auto trivial = closure_from({});
    subgroups[trivial.first] = {};
    std::vector<std::vector<int>> frontier{{}};
    while (!frontier.empty()) {
        std::vector<std::vector<int>> next;
        for (const auto &gens : frontier)
            for (int e = 0; e < g.order; ++e) {
                std::vector<int> extended = gens;
                extended.push_back(e);
                auto closed = closure_from(extended);
                if (subgroups.count(closed.first)) continue;
                subgroups[closed.first] = extended;
                next.push_back(std::move(extended));
            }
        frontier = std::move(next);
    }

    struct Sub {
        Bits bits;
        long size;
    };
    std::vector<Sub> subs;
    for (const auto &[bits, gens] : subgroups) {
        long sz = 0;
        for (uint64_t w : bits) sz += static_cast<long>(__builtin_popcountll(w));
        subs.push_back({bits, sz});
    }
    std::sort(subs.begin(), subs.end(), [](const Sub &a, const Sub &b) {
        return a.size > b.size;
    });
    auto subset = [&](const Bits &a, const Bits &b) { // a subset of b
        for (size_t i = 0; i < a.size(); ++i)
            if (a[i] & ~b[i]) return false;
        return true;
    };

    // Moebius function of the interval [H, G] in the subgroup lattice
    std::vector<long> mu(subs.size(), 0);
    mu[0] = 1; // subs[0] is G itself
    for (size_t h = 1; h < subs.size(); ++h) {
        long acc = 0;
        for (size_t k = 0; k < h; ++k)
            if (subs[k].size > subs[h].size || subs[k].bits != subs[h].bits)
                if (subset(subs[h].bits, subs[k].bits)) acc += mu[k];
        mu[h] = -acc;
    }
    long ordered = 0;
    for (size_t h = 0; h < subs.size(); ++h)
        ordered += mu[h] * subs[h].size * subs[h].size * subs[h].size;
    return reduce_by_center(g, ordered);
}

bool BraidOrbit::contains(const Triple &canonical) const {
    return std::find(members.begin(), members.end(), canonical) != members.end();
}

namespace {

int cycle_count(const std::vector<int> &perm) {
    int n = static_cast<int>(perm.size());
    std::vector<bool> seen(static_cast<size_t>(n), false);
    int cycles = 0;
    for (int i = 0; i < n; ++i) {
        if (seen[static_cast<size_t>(i)]) continue;
        ++cycles;
        for (int j = i; !seen[static_cast<size_t>(j)]; j = perm[static_cast<size_t>(j)])
            seen[static_cast<size_t>(j)] = true;
    }
    return cycles;
}

std::vector<int> cycle_type(const std::vector<int> &perm) {
    int n = static_cast<int>(perm.size());
    std::vector<bool> seen(static_cast<size_t>(n), false);
    std::vector<int> lens;
    for (int i = 0; i < n; ++i) {
        if (seen[static_cast<size_t>(i)]) continue;
        int len = 0;
        for (int j = i; !seen[static_cast<size_t>(j)]; j = perm[static_cast<size_t>(j)]) {
            seen[static_cast<size_t>(j)] = true;
            ++len;
        }
        lens.push_back(len);
    }
    std::sort(lens.rbegin(), lens.rend());
    return lens;
}

std::vector<int> compose_perm(const std::vector<int> &first, const std::vector<int> &then) {
    std::vector<int> r(first.size());
    for (size_t i = 0; i < first.size(); ++i)
        r[i] = then[static_cast<size_t>(first[i])];
    return r;
}

void finish_orbit(const FiniteGroup &g, BraidOrbit &orbit) {
    orbit.branches = static_cast<int>(orbit.members.size());
    orbit.representative = *std::min_element(orbit.members.begin(), orbit.members.end());
    const Triple &rep = orbit.representative;
    orbit.signature = {g.cls[static_cast<size_t>(rep[0])], g.cls[static_cast<size_t>(rep[1])],
                       g.cls[static_cast<size_t>(rep[2])],
                       g.cls[static_cast<size_t>(implied_m4(g, rep))]};
    orbit.cycles_sigma0 = cycle_type(orbit.sigma0);
    orbit.cycles_sigma1 = cycle_type(orbit.sigma1);
    std::vector<int> through = compose_perm(orbit.sigma0, orbit.sigma1);
    orbit.cycles_sigma_inf = cycle_type(through); // inverse has the same type
    orbit.genus = riemann_hurwitz_genus(orbit.branches, orbit.sigma0, orbit.sigma1);
}

} // namespace

int riemann_hurwitz_genus(int branches, const std::vector<int> &sigma0,
                          const std::vector<int> &sigma1) {
    int c0 = cycle_count(sigma0);
    int c1 = cycle_count(sigma1);
    int cinf = cycle_count(compose_perm(sigma0, sigma1));
    int twog = branches + 2 - c0 - c1 - cinf;
    if (twog % 2 != 0)
        throw math_error("Riemann-Hurwitz parity violated");
    int genus = twog / 2;
    if (genus < 0) throw math_error("negative genus from the orbit data");
    return genus;
}

BraidOrbit orbit_of(const FiniteGroup &g, const Triple &seed) {
    BraidOrbit orbit;
    std::map<Triple, int> index;
    std::vector<Triple> todo{canonical_triple(g, seed)};
    index[todo[0]] = 0;
    orbit.members.push_back(todo[0]);
    while (!todo.empty()) {
        Triple cur = todo.back();
        todo.pop_back();
        for (int i : {1, 2}) {
            Triple img = canonical_triple(g, braid_w(g, i, cur));
            if (!index.count(img)) {
                index[img] = static_cast<int>(orbit.members.size());
                orbit.members.push_back(img);
                todo.push_back(img);
            }
        }
    }
    std::sort(orbit.members.begin(), orbit.members.end());
    index.clear();
    for (size_t i = 0; i < orbit.members.size(); ++i)
        index[orbit.members[i]] = static_cast<int>(i);
    orbit.sigma0.resize(orbit.members.size());
    orbit.sigma1.resize(orbit.members.size());
    for (size_t i = 0; i < orbit.members.size(); ++i) {
        orbit.sigma0[i] = index.at(canonical_triple(g, braid_w(g, 1, orbit.members[i])));
        orbit.sigma1[i] = index.at(canonical_triple(g, braid_w(g, 2, orbit.members[i])));
    }
    finish_orbit(g, orbit);
    return orbit;
}

std::vector<BraidOrbit> enumerate_orbits(const FiniteGroup &g) {
    if (g.order > 160)
        throw math_error("enumerate_orbits: group too large for the full scan");
    SubgroupOracle oracle(g);
    size_t n = static_cast<size_t>(g.order);
    auto key = [n](const Triple &t) {
        return (static_cast<size_t>(t[0]) * n + static_cast<size_t>(t[1])) * n +
               static_cast<size_t>(t[2]);
    };
    std::vector<bool> visited(n * n * n, false);
    std::vector<Triple> reps;
    std::unordered_map<size_t, int> rep_index;

    // first unvisited member in lex order is the canonical form of its
    // simultaneous-conjugation class
    for (int a = 0; a < g.order; ++a)
        for (int b = 0; b < g.order; ++b) {
            int pid = oracle.pair_subgroup(a, b);
            for (int c = 0; c < g.order; ++c) {
                Triple t{a, b, c};
                if (visited[key(t)]) continue;
                if (!oracle.extend_generates(pid, c)) continue;
                rep_index[key(t)] = static_cast<int>(reps.size());
                reps.push_back(t);
                for (int h = 0; h < g.order; ++h)
                    visited[key({g.conj(h, a), g.conj(h, b), g.conj(h, c)})] = true;
            }
        }

    size_t m = reps.size();
    std::vector<int> s0(m), s1(m);
    for (size_t i = 0; i < m; ++i) {
        s0[i] = rep_index.at(key(canonical_triple(g, braid_w(g, 1, reps[i]))));
        s1[i] = rep_index.at(key(canonical_triple(g, braid_w(g, 2, reps[i]))));
    }
    std::vector<int> s0_inv(m), s1_inv(m);
    for (size_t i = 0; i < m; ++i) {
        s0_inv[static_cast<size_t>(s0[i])] = static_cast<int>(i);
        s1_inv[static_cast<size_t>(s1[i])] = static_cast<int>(i);
    }

    // connected components under <sigma0, sigma1>
    std::vector<int> component(m, -1);
    int num_components = 0;
    for (size_t start = 0; start < m; ++start) {
        if (component[start] >= 0) continue;
        int id = num_components++;
        std::vector<size_t> stack{start};
        component[start] = id;
        while (!stack.empty()) {
            size_t cur = stack.back();
            stack.pop_back();
            for (int next : {s0[cur], s1[cur], s0_inv[cur], s1_inv[cur]})
                if (component[static_cast<size_t>(next)] < 0) {
                    component[static_cast<size_t>(next)] = id;
                    stack.push_back(static_cast<size_t>(next));
                }
        }
    }

    std::vector<BraidOrbit> orbits(static_cast<size_t>(num_components));
    std::vector<std::vector<int>> locals(static_cast<size_t>(num_components));
    std::vector<int> local_index(m);
    for (size_t i = 0; i < m; ++i) {
        auto &orb = orbits[static_cast<size_t>(component[i])];
        local_index[i] = static_cast<int>(orb.members.size());
        orb.members.push_back(reps[i]);
        locals[static_cast<size_t>(component[i])].push_back(static_cast<int>(i));
    }
    for (size_t c = 0; c < orbits.size(); ++c) {
        auto &orb = orbits[c];
        orb.sigma0.resize(orb.members.size());
        orb.sigma1.resize(orb.members.size());
        for (size_t li = 0; li < locals[c].size(); ++li) {
            int gi = locals[c][li];
            orb.sigma0[li] = local_index[static_cast<size_t>(s0[static_cast<size_t>(gi)])];
            orb.sigma1[li] = local_index[static_cast<size_t>(s1[static_cast<size_t>(gi)])];
        }
        finish_orbit(g, orb);
    }
    std::sort(orbits.begin(), orbits.end(), [](const BraidOrbit &a, const BraidOrbit &b) {
        if (a.branches != b.branches) return a.branches < b.branches;
        return a.representative < b.representative;
    });
    return orbits;
}

std::vector<BraidOrbit> enumerate_orbits(const FiniteGroup &g,
                                         const std::array<int, 4> &signature) {
    std::vector<BraidOrbit> all = enumerate_orbits(g);
    std::vector<BraidOrbit> filtered;
    for (auto &orbit : all)
        if (orbit.signature == signature) filtered.push_back(std::move(orbit));
    return filtered;
}

} // namespace pvi
