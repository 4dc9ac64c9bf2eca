#include "msip/linalg.hpp"

namespace msip {

RatMatrix RatMatrix::identity(std::size_t n) {
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Rational(1);
    return m;
}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

RatMatrix to_rational(const IntMatrix& m) {
    RatMatrix r(m.rows, m.cols);
    for (std::size_t i = 0; i < m.a.size(); ++i) r.a[i] = Rational(m.a[i]);
    return r;
}

Int max_abs(const IntMatrix& m) {
    Int d = 0;
    for (const Int& x : m.a) {
        Int a = int_abs(x);
        if (a > d) d = a;
    }
    return d;
}

IntVec mat_vec(const IntMatrix& m, const IntVec& x) {
    if (x.size() != m.cols) throw InputError("mat_vec: dimension mismatch");
    IntVec y(m.rows, Int(0));
    for (std::size_t i = 0; i < m.rows; ++i)
        for (std::size_t j = 0; j < m.cols; ++j)
            if (m.at(i, j) != 0) y[i] += m.at(i, j) * x[j];
    return y;
}

RatVec mat_vec(const RatMatrix& m, const RatVec& x) {
    if (x.size() != m.cols) throw InputError("mat_vec: dimension mismatch");
    RatVec y(m.rows);
    for (std::size_t i = 0; i < m.rows; ++i)
        for (std::size_t j = 0; j < m.cols; ++j)
            if (!m.at(i, j).is_zero()) y[i] += m.at(i, j) * x[j];
    return y;
}

RatVec mat_vec(const IntMatrix& m, const RatVec& x) {
    return mat_vec(to_rational(m), x);
}

bool is_zero(const IntVec& v) {
    for (const Int& x : v)
        if (x != 0) return false;
    return true;
}

Int inf_norm(const IntVec& v) {
    Int n = 0;
    for (const Int& x : v) {
        Int a = int_abs(x);
        if (a > n) n = a;
    }
    return n;
}

Int one_norm(const IntVec& v) {
    Int n = 0;
    for (const Int& x : v) n += int_abs(x);
    return n;
}

Rational inf_norm(const RatVec& v) {
    Rational n;
    for (const Rational& x : v) {
        Rational a = x.abs();
        if (a > n) n = a;
    }
    return n;
}

IntVec add(const IntVec& a, const IntVec& b) {
    if (a.size() != b.size()) throw InputError("add: dimension mismatch");
    IntVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

IntVec sub(const IntVec& a, const IntVec& b) {
    if (a.size() != b.size()) throw InputError("sub: dimension mismatch");
    IntVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

IntVec negate(const IntVec& v) {
    IntVec r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = -v[i];
    return r;
}

IntVec scale(const Int& k, const IntVec& v) {
    IntVec r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = k * v[i];
    return r;
}

Rational dot(const RatVec& a, const RatVec& b) {
    if (a.size() != b.size()) throw InputError("dot: dimension mismatch");
    Rational s;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!a[i].is_zero() && !b[i].is_zero()) s += a[i] * b[i];
    return s;
}

Int dot(const IntVec& a, const IntVec& b) {
    if (a.size() != b.size()) throw InputError("dot: dimension mismatch");
    Int s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

std::optional<RatVec> solve_square(const RatMatrix& B, const RatVec& b) {
    if (B.rows != B.cols) throw InputError("solve_square: matrix not square");
    if (b.size() != B.rows) throw InputError("solve_square: dimension mismatch");
    const std::size_t n = B.rows;
    RatMatrix m = B;
    RatVec rhs = b;

    for (std::size_t k = 0; k < n; ++k) {
        // first nonzero pivot keeps elimination deterministic
        std::size_t piv = k;
        while (piv < n && m.at(piv, k).is_zero()) ++piv;
        if (piv == n) return std::nullopt;
        if (piv != k) {
            for (std::size_t j = 0; j < n; ++j) std::swap(m.at(piv, j), m.at(k, j));
            std::swap(rhs[piv], rhs[k]);
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            if (m.at(i, k).is_zero()) continue;
            Rational f = m.at(i, k) / m.at(k, k);
            for (std::size_t j = k; j < n; ++j) m.at(i, j) -= f * m.at(k, j);
            rhs[i] -= f * rhs[k];
        }
    }

    RatVec x(n);
    for (std::size_t k = n; k-- > 0;) {
        Rational s = rhs[k];
        for (std::size_t j = k + 1; j < n; ++j) s -= m.at(k, j) * x[j];
        x[k] = s / m.at(k, k);
    }
    return x;
}

Rational determinant(const RatMatrix& B) {
    if (B.rows != B.cols) throw InputError("determinant: matrix not square");
    const std::size_t n = B.rows;
    RatMatrix m = B;
    Rational det(1);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        while (piv < n && m.at(piv, k).is_zero()) ++piv;
        if (piv == n) return Rational(0);
        if (piv != k) {
            for (std::size_t j = 0; j < n; ++j) std::swap(m.at(piv, j), m.at(k, j));
            det = -det;
        }
        det *= m.at(k, k);
        for (std::size_t i = k + 1; i < n; ++i) {
            if (m.at(i, k).is_zero()) continue;
            Rational f = m.at(i, k) / m.at(k, k);
            for (std::size_t j = k; j < n; ++j) m.at(i, j) -= f * m.at(k, j);
        }
    }
    return det;
}

Int determinant(const IntMatrix& B) {
    Rational d = determinant(to_rational(B));
    return d.num();  // denominator is 1 for an integral matrix
}

std::vector<IntVec> kernel_lattice_basis(const IntMatrix& A) {
    const std::size_t m = A.rows, n = A.cols;
    IntMatrix h = A;
    IntMatrix u = IntMatrix::identity(n);

    auto col_axpy = [&](std::size_t dst, std::size_t src, const Int& q) {
        // column dst -= q * column src, in both h and u
        for (std::size_t i = 0; i < m; ++i) h.at(i, dst) -= q * h.at(i, src);
        for (std::size_t i = 0; i < n; ++i) u.at(i, dst) -= q * u.at(i, src);
    };
    auto col_swap = [&](std::size_t x, std::size_t y) {
        if (x == y) return;
        for (std::size_t i = 0; i < m; ++i) std::swap(h.at(i, x), h.at(i, y));
        for (std::size_t i = 0; i < n; ++i) std::swap(u.at(i, x), u.at(i, y));
    };
    auto col_negate = [&](std::size_t x) {
        for (std::size_t i = 0; i < m; ++i) h.at(i, x) = -h.at(i, x);
        for (std::size_t i = 0; i < n; ++i) u.at(i, x) = -u.at(i, x);
    };

    std::size_t c = 0;
    for (std::size_t r = 0; r < m && c < n; ++r) {
        while (true) {
            std::size_t piv = n;
            for (std::size_t j = c; j < n; ++j) {
                if (h.at(r, j) == 0) continue;
                if (piv == n || int_abs(h.at(r, j)) < int_abs(h.at(r, piv))) piv = j;
            }
            if (piv == n) break;  // row r already clear to the right of c
            bool clean = true;
            for (std::size_t j = c; j < n; ++j) {
                if (j == piv || h.at(r, j) == 0) continue;
                Int q = h.at(r, j) / h.at(r, piv);
                col_axpy(j, piv, q);
                if (h.at(r, j) != 0) clean = false;
            }
            if (clean) {
                col_swap(piv, c);
                if (h.at(r, c) < 0) col_negate(c);
                ++c;
                break;
            }
        }
    }

    std::vector<IntVec> basis;
    for (std::size_t j = c; j < n; ++j) {
        IntVec v(n);
        for (std::size_t i = 0; i < n; ++i) v[i] = u.at(i, j);
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace msip
