#pragma once

#include "pvi/rational.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <type_traits>
#include <vector>

namespace pvi {

// Dense square matrix over any field scalar (Rational, Complex, ...).
template <class S>
class SquareMatrix {
public:
    SquareMatrix() : n_(0) {}
    explicit SquareMatrix(int n) : n_(n), a_(static_cast<size_t>(n) * n, S(0)) {}
    SquareMatrix(int n, std::vector<S> entries) : n_(n), a_(std::move(entries)) {}

    static SquareMatrix identity(int n) {
        SquareMatrix m(n);
        for (int i = 0; i < n; ++i) m(i, i) = S(1);
        return m;
    }

    int size() const { return n_; }
    S &operator()(int i, int j) { return a_[static_cast<size_t>(i) * n_ + j]; }
    const S &operator()(int i, int j) const { return a_[static_cast<size_t>(i) * n_ + j]; }
    const std::vector<S> &entries() const { return a_; }

    bool operator==(const SquareMatrix &o) const { return n_ == o.n_ && a_ == o.a_; }

    SquareMatrix operator+(const SquareMatrix &o) const {
        SquareMatrix r(*this);
        for (size_t k = 0; k < a_.size(); ++k) r.a_[k] += o.a_[k];
        return r;
    }
    SquareMatrix operator-(const SquareMatrix &o) const {
        SquareMatrix r(*this);
        for (size_t k = 0; k < a_.size(); ++k) r.a_[k] -= o.a_[k];
        return r;
    }
    SquareMatrix operator-() const {
        SquareMatrix r(*this);
        for (auto &x : r.a_) x = -x;
        return r;
    }
    SquareMatrix operator*(const SquareMatrix &o) const {
        SquareMatrix r(n_);
        for (int i = 0; i < n_; ++i)
            for (int k = 0; k < n_; ++k) {
                const S &aik = (*this)(i, k);
                if (aik == S(0)) continue;
                for (int j = 0; j < n_; ++j) r(i, j) += aik * o(k, j);
            }
        return r;
    }
    SquareMatrix operator*(const S &c) const {
        SquareMatrix r(*this);
        for (auto &x : r.a_) x *= c;
        return r;
    }

    S trace() const {
        S t(0);
        for (int i = 0; i < n_; ++i) t += (*this)(i, i);
        return t;
    }

private:
    int n_;
    std::vector<S> a_;
};

template <class S>
SquareMatrix<S> commutator(const SquareMatrix<S> &a, const SquareMatrix<S> &b) {
    return a * b - b * a;
}

// Gauss-Jordan inverse; works over any field scalar. Pivot selection uses
// magnitude for Complex and nonzero-scan for exact scalars.
template <class S>
SquareMatrix<S> inverse(const SquareMatrix<S> &m) {
    int n = m.size();
    SquareMatrix<S> a(m), inv = SquareMatrix<S>::identity(n);
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        if constexpr (std::is_same_v<S, Complex>) {
            double best = 0.0;
            for (int r = col; r < n; ++r)
                if (std::abs(a(r, col)) > best) { best = std::abs(a(r, col)); piv = r; }
        } else {
            for (int r = col; r < n; ++r)
                if (a(r, col) != S(0)) { piv = r; break; }
        }
        if (piv < 0 || a(piv, col) == S(0))
            throw singular_system("singular matrix in inverse()");
        if (piv != col)
            for (int j = 0; j < n; ++j) {
                std::swap(a(piv, j), a(col, j));
                std::swap(inv(piv, j), inv(col, j));
            }
        S d = S(1) / a(col, col);
        for (int j = 0; j < n; ++j) { a(col, j) *= d; inv(col, j) *= d; }
        for (int r = 0; r < n; ++r) {
            if (r == col) continue;
            S f = a(r, col);
            if (f == S(0)) continue;
            for (int j = 0; j < n; ++j) {
                a(r, j) -= f * a(col, j);
                inv(r, j) -= f * inv(col, j);
            }
        }
    }
    return inv;
}

template <class S>
S determinant(const SquareMatrix<S> &m) {
    int n = m.size();
    if (n == 1) return m(0, 0);
    if (n == 2) return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
    if (n == 3)
        return m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) -
               m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
               m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
    throw math_error("determinant: unsupported dimension");
}

// true iff every 2x2 minor vanishes (rank <= 1), exact scalars only
template <class S>
bool rank_at_most_one(const SquareMatrix<S> &m) {
    int n = m.size();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = 0; k < n; ++k)
                for (int l = k + 1; l < n; ++l)
                    if (m(i, k) * m(j, l) - m(i, l) * m(j, k) != S(0)) return false;
    return true;
}

// coefficients of det(X I - m) for a 3x3 matrix, as {c0, c1, c2} with
// char(X) = X^3 + c2 X^2 + c1 X + c0
template <class S>
std::array<S, 3> char_poly_3(const SquareMatrix<S> &m) {
    S tr = m.trace();
    S tr2 = (m * m).trace();
    S det = determinant(m);
    S c2 = -tr;
    S c1 = (tr * tr - tr2) / S(2);
    S c0 = -det;
    return {c0, c1, c2};
}

using MatC = SquareMatrix<Complex>;
using MatQ = SquareMatrix<Rational>;

inline double max_abs(const MatC &m) {
    double r = 0.0;
    for (const auto &x : m.entries()) r = std::max(r, std::abs(x));
    return r;
}

inline double distance(const MatC &a, const MatC &b) {
    double r = 0.0;
    for (size_t k = 0; k < a.entries().size(); ++k)
        r = std::max(r, std::abs(a.entries()[k] - b.entries()[k]));
    return r;
}

inline MatC to_complex(const MatQ &m) {
    MatC r(m.size());
    for (int i = 0; i < m.size(); ++i)
        for (int j = 0; j < m.size(); ++j) r(i, j) = to_complex(m(i, j));
    return r;
}

} // namespace pvi
