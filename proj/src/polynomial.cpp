#include "pvi/polynomial.hpp"

#include <algorithm>

namespace pvi {

void PolynomialQ::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

PolynomialQ PolynomialQ::variable() {
    return PolynomialQ{Rational(0), Rational(1)};
}

PolynomialQ PolynomialQ::monomial(int deg, const Rational &c) {
    if (c == 0 || deg < 0) return {};
    std::vector<Rational> v(static_cast<size_t>(deg) + 1, Rational(0));
    v.back() = c;
    return PolynomialQ(std::move(v));
}

Rational PolynomialQ::coefficient(int k) const {
    if (k < 0 || k >= static_cast<int>(coeffs_.size())) return Rational(0);
    return coeffs_[static_cast<size_t>(k)];
}

Rational PolynomialQ::leading_coefficient() const {
    return coeffs_.empty() ? Rational(0) : coeffs_.back();
}

PolynomialQ PolynomialQ::operator-() const {
    PolynomialQ r(*this);
    for (auto &c : r.coeffs_) c = -c;
    return r;
}

PolynomialQ PolynomialQ::operator+(const PolynomialQ &o) const {
    std::vector<Rational> v(std::max(coeffs_.size(), o.coeffs_.size()), Rational(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) v[i] += coeffs_[i];
    for (size_t i = 0; i < o.coeffs_.size(); ++i) v[i] += o.coeffs_[i];
    return PolynomialQ(std::move(v));
}

PolynomialQ PolynomialQ::operator-(const PolynomialQ &o) const {
    return *this + (-o);
}

PolynomialQ PolynomialQ::operator*(const PolynomialQ &o) const {
    if (is_zero() || o.is_zero()) return {};
    std::vector<Rational> v(coeffs_.size() + o.coeffs_.size() - 1, Rational(0));
    for (size_t i = 0; i < coeffs_.size(); ++i)
        for (size_t j = 0; j < o.coeffs_.size(); ++j)
            v[i + j] += coeffs_[i] * o.coeffs_[j];
    return PolynomialQ(std::move(v));
}

PolynomialQ PolynomialQ::operator*(const Rational &c) const {
    if (c == 0) return {};
    PolynomialQ r(*this);
    for (auto &x : r.coeffs_) x *= c;
    return r;
}

std::pair<PolynomialQ, PolynomialQ> PolynomialQ::divmod(const PolynomialQ &a,
                                                        const PolynomialQ &b) {
    if (b.is_zero()) throw division_by_zero("polynomial division by zero");
    if (a.degree() < b.degree()) return {PolynomialQ{}, a};
    std::vector<Rational> rem = a.coeffs_;
    std::vector<Rational> quo(static_cast<size_t>(a.degree() - b.degree()) + 1, Rational(0));
    const Rational &lc = b.coeffs_.back();
    for (int k = a.degree() - b.degree(); k >= 0; --k) {
        Rational q = rem[static_cast<size_t>(k + b.degree())] / lc;
        quo[static_cast<size_t>(k)] = q;
        if (q != 0)
            for (size_t i = 0; i < b.coeffs_.size(); ++i)
                rem[static_cast<size_t>(k) + i] -= q * b.coeffs_[i];
    }
    rem.resize(static_cast<size_t>(std::max(b.degree(), 0)));
    return {PolynomialQ(std::move(quo)), PolynomialQ(std::move(rem))};
}

PolynomialQ PolynomialQ::derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<Rational> v(coeffs_.size() - 1);
    for (size_t i = 1; i < coeffs_.size(); ++i)
        v[i - 1] = coeffs_[i] * Rational(static_cast<long>(i));
    return PolynomialQ(std::move(v));
}

PolynomialQ PolynomialQ::make_monic() const {
    if (is_zero()) return {};
    return *this * (Rational(1) / leading_coefficient());
}

Rational PolynomialQ::evaluate(const Rational &s0) const {
    Rational acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * s0 + *it;
    return acc;
}

Complex PolynomialQ::evaluate(const Complex &s0) const {
    Complex acc(0.0, 0.0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * s0 + to_complex(*it);
    return acc;
}

namespace {

// Integer-coefficient workhorse for the gcd: primitive PRS keeps the
// coefficient growth in check while staying exact.
using PolyZ = std::vector<Integer>; // ascending, trimmed

void trim_z(PolyZ &p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

Integer content_z(const PolyZ &p) {
    Integer g(0);
    for (const auto &c : p) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

PolyZ primitive_part(PolyZ p) {
    Integer g = content_z(p);
    if (g == 0) return {};
    if (sgn(p.back()) < 0) g = -g;
    for (auto &c : p) c /= g;
    return p;
}

// remainder of lb^m * a under division by b for some m >= 1; any such
// multiple works because the caller takes primitive parts
PolyZ pseudo_rem(PolyZ a, const PolyZ &b) {
    int db = static_cast<int>(b.size()) - 1;
    const Integer &lb = b.back();
    while (static_cast<int>(a.size()) - 1 >= db) {
        size_t k = a.size() - 1 - static_cast<size_t>(db);
        Integer top = a.back();
        for (auto &c : a) c *= lb;
        for (int i = 0; i <= db; ++i)
            a[k + static_cast<size_t>(i)] -= top * b[static_cast<size_t>(i)];
        trim_z(a);
    }
    return a;
}

PolyZ to_primitive_z(const PolynomialQ &p) {
    Integer lcm(1);
    for (const auto &c : p.coefficients())
        mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den().get_mpz_t());
    PolyZ out(p.coefficients().size());
    for (size_t i = 0; i < out.size(); ++i) {
        Rational scaled = p.coefficients()[i] * Rational(lcm);
        out[i] = scaled.get_num();
    }
    return primitive_part(std::move(out));
}

// degree of gcd mod a word-size prime; -1 when the reduction degenerates
int gcd_degree_mod_p(const PolyZ &a, const PolyZ &b, unsigned long p) {
    auto reduce = [p](const PolyZ &q) {
        std::vector<unsigned long> r(q.size());
        for (size_t i = 0; i < q.size(); ++i) {
            Integer m = q[i] % static_cast<long>(p);
            if (m < 0) m += static_cast<long>(p);
            r[i] = m.get_ui();
        }
        while (!r.empty() && r.back() == 0) r.pop_back();
        return r;
    };
    auto ra = reduce(a), rb = reduce(b);
    if (ra.size() != a.size() || rb.size() != b.size()) return -1; // lc vanished
    auto mulmod = [p](unsigned long x, unsigned long y) {
        return static_cast<unsigned long>((__uint128_t)x * y % p);
    };
    auto powmod = [&](unsigned long x, unsigned long e) {
        unsigned long r = 1;
        while (e) {
            if (e & 1) r = mulmod(r, x);
            x = mulmod(x, x);
            e >>= 1;
        }
        return r;
    };
    while (!rb.empty()) {
        // ra mod rb
        unsigned long inv = powmod(rb.back(), p - 2);
        int da = static_cast<int>(ra.size()) - 1, db = static_cast<int>(rb.size()) - 1;
        for (int k = da - db; k >= 0; --k) {
            unsigned long q = mulmod(ra[static_cast<size_t>(k + db)], inv);
            if (q)
                for (int i = 0; i <= db; ++i) {
                    auto &slot = ra[static_cast<size_t>(k + i)];
                    slot = (slot + p - mulmod(q, rb[static_cast<size_t>(i)])) % p;
                }
        }
        while (!ra.empty() && ra.back() == 0) ra.pop_back();
        std::swap(ra, rb);
    }
    return static_cast<int>(ra.size()) - 1;
}

} // namespace

PolynomialQ poly_gcd(const PolynomialQ &a, const PolynomialQ &b) {
    if (a.is_zero()) return b.make_monic();
    if (b.is_zero()) return a.make_monic();
    PolyZ pa = to_primitive_z(a), pb = to_primitive_z(b);
    if (pa.size() < pb.size()) std::swap(pa, pb);

    // Fast path: a trivial gcd modulo a prime certifies a trivial gcd over Q.
    int dmod = gcd_degree_mod_p(pa, pb, 2147483647UL);
    if (dmod == 0) return PolynomialQ(Rational(1));

    while (!pb.empty()) {
        if (pb.size() == 1) return PolynomialQ(Rational(1));
        PolyZ r = primitive_part(pseudo_rem(pa, pb));
        pa = std::move(pb);
        pb = std::move(r);
    }
    std::vector<Rational> out(pa.size());
    for (size_t i = 0; i < pa.size(); ++i) out[i] = Rational(pa[i]);
    return PolynomialQ(std::move(out)).make_monic();
}

} // namespace pvi
