#include "graver_oracle.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace oracle {

namespace {

long long iabs(long long x) { return x < 0 ? -x : x; }

// Rank over Q by fraction-free elimination (entries stay tiny here).
int rank_of(Mat a) {
    if (a.empty()) return 0;
    const std::size_t m = a.size(), n = a[0].size();
    int rank = 0;
    std::size_t row = 0;
    for (std::size_t col = 0; col < n && row < m; ++col) {
        std::size_t piv = row;
        while (piv < m && a[piv][col] == 0) ++piv;
        if (piv == m) continue;
        std::swap(a[piv], a[row]);
        for (std::size_t i = row + 1; i < m; ++i) {
            if (a[i][col] == 0) continue;
            long long f1 = a[row][col], f2 = a[i][col];
            for (std::size_t j = col; j < n; ++j) a[i][j] = a[i][j] * f1 - a[row][j] * f2;
            long long g = 0;
            for (std::size_t j = col; j < n; ++j) g = std::gcd(g, iabs(a[i][j]));
            if (g > 1)
                for (std::size_t j = col; j < n; ++j) a[i][j] /= g;
        }
        ++row;
        ++rank;
    }
    return rank;
}

// Integer kernel lattice basis via unimodular column operations.
std::vector<Vec> kernel_basis(const Mat& A, std::size_t n) {
    const std::size_t m = A.size();
    Mat h = A;
    Mat u(n, Vec(n, 0));
    for (std::size_t i = 0; i < n; ++i) u[i][i] = 1;

    std::size_t c = 0;
    for (std::size_t r = 0; r < m && c < n; ++r) {
        while (true) {
            std::size_t piv = n;
            for (std::size_t j = c; j < n; ++j)
                if (h[r][j] != 0 && (piv == n || iabs(h[r][j]) < iabs(h[r][piv]))) piv = j;
            if (piv == n) break;
            bool clean = true;
            for (std::size_t j = c; j < n; ++j) {
                if (j == piv || h[r][j] == 0) continue;
                long long q = h[r][j] / h[r][piv];
                for (std::size_t i = 0; i < m; ++i) h[i][j] -= q * h[i][piv];
                for (std::size_t i = 0; i < n; ++i) u[i][j] -= q * u[i][piv];
                if (h[r][j] != 0) clean = false;
            }
            if (clean) {
                for (std::size_t i = 0; i < m; ++i) std::swap(h[i][piv], h[i][c]);
                for (std::size_t i = 0; i < n; ++i) std::swap(u[i][piv], u[i][c]);
                ++c;
                break;
            }
        }
    }
    std::vector<Vec> basis;
    for (std::size_t j = c; j < n; ++j) {
        Vec v(n);
        for (std::size_t i = 0; i < n; ++i) v[i] = u[i][j];
        basis.push_back(std::move(v));
    }
    return basis;
}

long long det_recursive(const Mat& s, std::vector<std::size_t> cols, std::size_t row) {
    if (cols.empty()) return 1;
    long long det = 0;
    long long sign = 1;
    for (std::size_t k = 0; k < cols.size(); ++k) {
        std::vector<std::size_t> rest;
        for (std::size_t j = 0; j < cols.size(); ++j)
            if (j != k) rest.push_back(cols[j]);
        det += sign * s[row][cols[k]] * det_recursive(s, rest, row + 1);
        sign = -sign;
    }
    return det;
}

long long det_of(const Mat& s) {
    std::vector<std::size_t> cols(s.size());
    for (std::size_t j = 0; j < cols.size(); ++j) cols[j] = j;
    return det_recursive(s, cols, 0);
}

// gcd of all k x k minors of the n' x k matrix V; 1 certifies that the
// column span is the full kernel lattice (a saturated sublattice).
long long minor_gcd(const std::vector<Vec>& V, std::size_t np, std::size_t k) {
    std::vector<std::size_t> comb(k);
    for (std::size_t i = 0; i < k; ++i) comb[i] = i;
    long long g = 0;
    while (true) {
        Mat s(k, Vec(k));
        for (std::size_t r = 0; r < k; ++r)
            for (std::size_t c = 0; c < k; ++c) s[r][c] = V[c][comb[r]];
        g = std::gcd(g, iabs(det_of(s)));
        if (g == 1) return 1;
        std::size_t i = k;
        bool moved = false;
        while (i > 0) {
            --i;
            if (comb[i] < np - k + i) {
                ++comb[i];
                for (std::size_t j = i + 1; j < k; ++j) comb[j] = comb[j - 1] + 1;
                moved = true;
                break;
            }
        }
        if (!moved) break;
    }
    return g;
}

// Conformal order on int64 vectors.
bool conf_leq(const Vec& x, const Vec& y) {
    for (std::size_t j = 0; j < x.size(); ++j) {
        if ((x[j] > 0 && y[j] < 0) || (x[j] < 0 && y[j] > 0)) return false;
        if (iabs(x[j]) > iabs(y[j])) return false;
    }
    return true;
}

// Antichain of minimal elements under arbitrary insertion order.
struct MinimalSet {
    std::vector<Vec> items;

    void insert(const Vec& x) {
        for (const Vec& h : items)
            if (conf_leq(h, x)) return;
        std::erase_if(items, [&](const Vec& h) { return conf_leq(x, h); });
        items.push_back(x);
    }
};

// 0, 1, -1, 2, -2, ... so small kernel vectors arrive early and the
// antichain stays near its final size.
long long spiral(long long idx) { return (idx % 2 == 1) ? (idx + 1) / 2 : -(idx / 2); }

}  // namespace

std::vector<Vec> graver_box_oracle(const Mat& A, long long bound) {
    if (A.empty()) throw std::invalid_argument("oracle: empty matrix");
    const std::size_t m = A.size(), n = A[0].size();

    std::vector<std::size_t> live;  // columns with a nonzero entry
    std::vector<bool> zero_col(n, true);
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t i = 0; i < m; ++i)
            if (A[i][j] != 0) zero_col[j] = false;
        if (!zero_col[j]) live.push_back(j);
    }

    std::vector<Vec> result;
    for (std::size_t j = 0; j < n; ++j) {
        if (!zero_col[j]) continue;
        Vec e(n, 0);
        e[j] = 1;
        result.push_back(e);
        e[j] = -1;
        result.push_back(e);
    }

    const std::size_t np = live.size();
    if (np > 0) {
        Mat sub(m, Vec(np));
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < np; ++j) sub[i][j] = A[i][live[j]];

        std::vector<Vec> V = kernel_basis(sub, np);
        const std::size_t k = V.size();

        // Certify the lattice basis before trusting it.
        if (static_cast<int>(np - k) != rank_of(sub))
            throw std::logic_error("oracle: kernel dimension mismatch");
        for (const Vec& v : V)
            for (std::size_t i = 0; i < m; ++i) {
                long long s = 0;
                for (std::size_t j = 0; j < np; ++j) s += sub[i][j] * v[j];
                if (s != 0) throw std::logic_error("oracle: basis vector not in kernel");
            }
        if (k > 0 && minor_gcd(V, np, k) != 1)
            throw std::logic_error("oracle: kernel basis is not saturated");

        if (k > 0) {
            // Invertible row subset S of V gives w = S^{-1} x_R, so
            // |w_j| <= sum_i |adj(S)_{ji}| * bound / |det S|.
            std::vector<std::size_t> rows(k);
            for (std::size_t i = 0; i < k; ++i) rows[i] = i;
            long long det = 0;
            while (true) {
                Mat s(k, Vec(k));
                for (std::size_t r = 0; r < k; ++r)
                    for (std::size_t c = 0; c < k; ++c) s[r][c] = V[c][rows[r]];
                det = det_of(s);
                if (det != 0) break;
                std::size_t i = k;
                bool moved = false;
                while (i > 0) {
                    --i;
                    if (rows[i] < np - k + i) {
                        ++rows[i];
                        for (std::size_t j = i + 1; j < k; ++j) rows[j] = rows[j - 1] + 1;
                        moved = true;
                        break;
                    }
                }
                if (!moved) throw std::logic_error("oracle: no invertible row subset");
            }

            Mat S(k, Vec(k));
            for (std::size_t r = 0; r < k; ++r)
                for (std::size_t c = 0; c < k; ++c) S[r][c] = V[c][rows[r]];
            // adj via cofactors (k <= 3 in practice)
            Mat adj(k, Vec(k));
            for (std::size_t r = 0; r < k; ++r)
                for (std::size_t c = 0; c < k; ++c) {
                    Mat minor(k - 1, Vec(k - 1));
                    for (std::size_t i = 0, mi = 0; i < k; ++i) {
                        if (i == c) continue;
                        for (std::size_t j = 0, mj = 0; j < k; ++j) {
                            if (j == r) continue;
                            minor[mi][mj++] = S[i][j];
                        }
                        ++mi;
                    }
                    long long d = (k == 1) ? 1 : det_of(minor);
                    adj[r][c] = (((r + c) % 2) ? -d : d);
                }

            std::vector<long long> wbox(k);
            for (std::size_t j = 0; j < k; ++j) {
                __int128 s = 0;
                for (std::size_t i = 0; i < k; ++i) s += iabs(adj[j][i]);
                __int128 lim = s * bound / iabs(det);
                if (lim > (1ll << 40)) throw std::logic_error("oracle: coefficient box too large");
                wbox[j] = static_cast<long long>(lim);
            }

            MinimalSet mins;
            std::vector<long long> idx(k, 0);
            Vec w(k), x(np);
            while (true) {
                bool nonzero = false;
                for (std::size_t j = 0; j < k; ++j) {
                    w[j] = spiral(idx[j]);
                    if (w[j] != 0) nonzero = true;
                }
                if (nonzero) {
                    bool inside = true;
                    for (std::size_t i = 0; i < np && inside; ++i) {
                        long long s = 0;
                        for (std::size_t j = 0; j < k; ++j) s += V[j][i] * w[j];
                        if (iabs(s) > bound) inside = false;
                        x[i] = s;
                    }
                    if (inside) {
                        bool xz = true;
                        for (long long v : x)
                            if (v != 0) { xz = false; break; }
                        if (!xz) mins.insert(x);
                    }
                }
                std::size_t j = k;
                bool moved = false;
                while (j > 0) {
                    --j;
                    if (idx[j] < 2 * wbox[j]) {
                        ++idx[j];
                        for (std::size_t i = j + 1; i < k; ++i) idx[i] = 0;
                        moved = true;
                        break;
                    }
                }
                if (!moved) break;
            }

            for (const Vec& v : mins.items) {
                Vec full(n, 0);
                for (std::size_t j = 0; j < np; ++j) full[live[j]] = v[j];
                result.push_back(std::move(full));
            }
        }
    }

    std::sort(result.begin(), result.end());
    return result;
}

}  // namespace oracle
