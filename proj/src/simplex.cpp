#include "msip/simplex.hpp"

#include <algorithm>
#include <cassert>

namespace msip {

const char* to_string(LpStatus s) {
    switch (s) {
        case LpStatus::Optimal: return "optimal";
        case LpStatus::Infeasible: return "infeasible";
        case LpStatus::Unbounded: return "unbounded";
    }
    return "unknown";
}

namespace {

// Tableau rows are B^{-1}[A | b]; basis[i] is the basic column of row i.
struct Tableau {
    std::size_t nrows;
    std::size_t ncols;  // structural + artificial columns, rhs excluded
    std::vector<RatVec> row;
    std::vector<std::size_t> basis;

    Rational& rhs(std::size_t i) { return row[i][ncols]; }
    const Rational& rhs(std::size_t i) const { return row[i][ncols]; }

    void pivot(std::size_t r, std::size_t c) {
        Rational p = row[r][c];
        for (auto& v : row[r]) v /= p;
        for (std::size_t i = 0; i < nrows; ++i) {
            if (i == r || row[i][c].is_zero()) continue;
            Rational f = row[i][c];
            for (std::size_t j = 0; j <= ncols; ++j) row[i][j] -= f * row[r][j];
        }
        basis[r] = c;
    }
};

enum class Phase { OptimalReached, Unbounded };

// Bland's rule: entering = least-index column with negative reduced cost;
// leaving = least basic index among the ratio-test minimizers.
Phase run_bland(Tableau& t, const RatVec& cost, std::size_t enter_limit) {
    while (true) {
        std::size_t enter = enter_limit;
        for (std::size_t j = 0; j < enter_limit; ++j) {
            bool basic = false;
            for (std::size_t i = 0; i < t.nrows; ++i)
                if (t.basis[i] == j) { basic = true; break; }
            if (basic) continue;
            Rational red = cost[j];
            for (std::size_t i = 0; i < t.nrows; ++i)
                if (!t.row[i][j].is_zero()) red -= cost[t.basis[i]] * t.row[i][j];
            if (red < Rational(0)) { enter = j; break; }
        }
        if (enter == enter_limit) return Phase::OptimalReached;

        std::size_t leave = t.nrows;
        Rational best;
        for (std::size_t i = 0; i < t.nrows; ++i) {
            if (!(t.row[i][enter] > Rational(0))) continue;
            Rational ratio = t.rhs(i) / t.row[i][enter];
            if (leave == t.nrows || ratio < best ||
                (ratio == best && t.basis[i] < t.basis[leave])) {
                leave = i;
                best = ratio;
            }
        }
        if (leave == t.nrows) return Phase::Unbounded;
        t.pivot(leave, enter);
    }
}

}  // namespace

LpResult simplex_solve(const RatMatrix& A, const RatVec& b, const RatVec& c, Sense sense) {
    const std::size_t m = A.rows, n = A.cols;
    if (b.size() != m || c.size() != n) throw InputError("simplex_solve: dimension mismatch");

    Tableau t;
    t.nrows = m;
    t.ncols = n + m;
    t.row.assign(m, RatVec(n + m + 1));
    t.basis.resize(m);
    for (std::size_t i = 0; i < m; ++i) {
        bool flip = b[i] < Rational(0);
        for (std::size_t j = 0; j < n; ++j) t.row[i][j] = flip ? -A.at(i, j) : A.at(i, j);
        t.row[i][n + i] = Rational(1);
        t.rhs(i) = flip ? -b[i] : b[i];
        t.basis[i] = n + i;
    }

    // Phase 1: minimize the sum of artificial variables.
    RatVec phase1(n + m + 1);
    for (std::size_t j = n; j < n + m; ++j) phase1[j] = Rational(1);
    Phase p1 = run_bland(t, phase1, n + m);
    assert(p1 == Phase::OptimalReached);
    (void)p1;

    Rational infeas;
    for (std::size_t i = 0; i < m; ++i)
        if (t.basis[i] >= n) infeas += t.rhs(i);
    if (!infeas.is_zero()) return {LpStatus::Infeasible, {}, {}};

    // Drive leftover artificials out of the basis; an all-zero structural
    // row is redundant and gets dropped.
    std::vector<bool> drop(m, false);
    for (std::size_t i = 0; i < m; ++i) {
        if (t.basis[i] < n) continue;
        std::size_t piv = n;
        for (std::size_t j = 0; j < n; ++j)
            if (!t.row[i][j].is_zero()) { piv = j; break; }
        if (piv < n)
            t.pivot(i, piv);
        else
            drop[i] = true;
    }
    if (std::find(drop.begin(), drop.end(), true) != drop.end()) {
        Tableau kept;
        kept.ncols = t.ncols;
        for (std::size_t i = 0; i < m; ++i) {
            if (drop[i]) continue;
            kept.row.push_back(t.row[i]);
            kept.basis.push_back(t.basis[i]);
        }
        kept.nrows = kept.row.size();
        t = std::move(kept);
    }

    // Phase 2 on structural columns only.
    RatVec cost(n + m + 1);
    for (std::size_t j = 0; j < n; ++j) cost[j] = (sense == Sense::Max) ? -c[j] : c[j];
    Phase p2 = run_bland(t, cost, n);
    if (p2 == Phase::Unbounded) return {LpStatus::Unbounded, {}, {}};

    RatVec x(n);
    for (std::size_t i = 0; i < t.nrows; ++i)
        if (t.basis[i] < n) x[t.basis[i]] = t.rhs(i);
    return {LpStatus::Optimal, x, dot(c, x)};
}

LpResult simplex_solve_boxed(const RatMatrix& A, const RatVec& b, const RatVec& c, Sense sense,
                             const RatVec& lo, const RatVec& hi) {
    const std::size_t m = A.rows, n = A.cols;
    if (b.size() != m || c.size() != n || lo.size() != n || hi.size() != n)
        throw InputError("simplex_solve_boxed: dimension mismatch");
    for (std::size_t j = 0; j < n; ++j)
        if (hi[j] < lo[j]) return {LpStatus::Infeasible, {}, {}};

    // Shift x = lo + y and bound y with slack rows y_j + s_j = hi_j - lo_j.
    RatMatrix A2(m + n, 2 * n);
    RatVec b2(m + n), c2(2 * n);
    for (std::size_t i = 0; i < m; ++i) {
        Rational shift;
        for (std::size_t j = 0; j < n; ++j) {
            A2.at(i, j) = A.at(i, j);
            shift += A.at(i, j) * lo[j];
        }
        b2[i] = b[i] - shift;
    }
    for (std::size_t j = 0; j < n; ++j) {
        A2.at(m + j, j) = Rational(1);
        A2.at(m + j, n + j) = Rational(1);
        b2[m + j] = hi[j] - lo[j];
        c2[j] = c[j];
    }

    LpResult inner = simplex_solve(A2, b2, c2, sense);
    if (inner.status != LpStatus::Optimal) return inner;

    RatVec x(n);
    for (std::size_t j = 0; j < n; ++j) x[j] = inner.vertex[j] + lo[j];
    return {LpStatus::Optimal, x, dot(c, x)};
}

ConeResult cone_member(const std::vector<IntVec>& generators, const RatVec& b) {
    const std::size_t d = b.size();
    for (const auto& g : generators)
        if (g.size() != d) throw InputError("cone_member: dimension mismatch");

    RatMatrix M(d, generators.size());
    for (std::size_t j = 0; j < generators.size(); ++j)
        for (std::size_t i = 0; i < d; ++i) M.at(i, j) = Rational(generators[j][i]);

    LpResult lp = simplex_solve(M, b, RatVec(generators.size()), Sense::Min);
    if (lp.status != LpStatus::Optimal) return {false, {}};
    return {true, lp.vertex};
}

}  // namespace msip
