#include "msip/solver.hpp"

#include <algorithm>

namespace msip {

const char* to_string(SolveStatus s) {
    switch (s) {
        case SolveStatus::Optimal: return "optimal";
        case SolveStatus::Infeasible: return "infeasible";
        case SolveStatus::Unbounded: return "unbounded";
        case SolveStatus::BudgetExceeded: return "budget-exceeded";
    }
    return "unknown";
}

Box effective_box(const Program& P, const std::optional<Int>& lo, const std::optional<Int>& hi) {
    const std::size_t N = P.A.entries.cols;
    Box box;
    box.lo.resize(N);
    box.hi.resize(N);
    for (std::size_t j = 0; j < N; ++j) {
        Int l = P.lower[j].value_or(Int(0));
        if (lo && *lo > l) l = *lo;
        std::optional<Int> u = P.upper[j];
        if (hi && (!u || *hi < *u)) u = *hi;
        if (!u)
            throw InputError("effective_box: variable " + std::to_string(j + 1) +
                             " has no finite upper bound; pass an explicit box");
        box.lo[j] = l;
        box.hi[j] = *u;
    }
    return box;
}

namespace {

Int box_volume(const Box& box) {
    Int vol = 1;
    for (std::size_t j = 0; j < box.lo.size(); ++j) {
        if (box.hi[j] < box.lo[j]) return 0;
        vol *= box.hi[j] - box.lo[j] + 1;
    }
    return vol;
}

bool within(const IntVec& x, const Box& box) {
    for (std::size_t j = 0; j < x.size(); ++j)
        if (x[j] < box.lo[j] || x[j] > box.hi[j]) return false;
    return true;
}

// Lexicographic odometer over the box; returns false after the last point.
bool advance_box(IntVec& x, const Box& box) {
    std::size_t k = x.size();
    while (k > 0) {
        --k;
        if (x[k] < box.hi[k]) {
            ++x[k];
            for (std::size_t j = k + 1; j < x.size(); ++j) x[j] = box.lo[j];
            return true;
        }
    }
    return false;
}

}  // namespace

SolveReport brute_force_ilp(const Program& P, const Box& box, std::uint64_t budget) {
    const std::size_t N = P.A.entries.cols;
    if (box.lo.size() != N || box.hi.size() != N)
        throw InputError("brute_force_ilp: box dimension mismatch");
    Int vol = box_volume(box);
    if (vol == 0) return {SolveStatus::Infeasible, {}, {}, {}, {}};
    if (vol > Int(budget)) return {SolveStatus::BudgetExceeded, {}, {}, {}, {}};

    SolveReport rep;
    rep.status = SolveStatus::Infeasible;
    IntVec x = box.lo;
    IntVec b = P.b;
    do {
        if (mat_vec(P.A.entries, x) != b) continue;
        Int obj = dot(P.c, x);
        if (rep.status == SolveStatus::Infeasible || obj < rep.objective) {
            rep.status = SolveStatus::Optimal;
            rep.x = x;
            rep.objective = obj;
        }
    } while (advance_box(x, box));
    return rep;
}

std::optional<IntVec> find_feasible(const Program& P, const Box& box, std::uint64_t budget) {
    const std::size_t N = P.A.entries.cols;
    if (box.lo.size() != N || box.hi.size() != N)
        throw InputError("find_feasible: box dimension mismatch");
    Int vol = box_volume(box);
    if (vol == 0) return std::nullopt;
    if (vol > Int(budget)) throw BudgetError("find_feasible: box volume exceeds budget");

    IntVec x = box.lo;
    do {
        if (mat_vec(P.A.entries, x) == P.b) return x;
    } while (advance_box(x, box));
    return std::nullopt;
}

SolveReport solve_augmentation(const Program& P, const Box& box,
                               const std::optional<IntVec>& start, const GraverOptions& gopts,
                               std::uint64_t budget) {
    const std::size_t N = P.A.entries.cols;
    IntVec x;
    if (start) {
        x = *start;
        if (x.size() != N || !within(x, box) || mat_vec(P.A.entries, x) != P.b)
            throw InputError("solve_augmentation: start point is not feasible");
    } else {
        auto found = find_feasible(P, box, budget);
        if (!found) return {SolveStatus::Infeasible, {}, {}, {}, {}};
        x = std::move(*found);
    }

    GraverBasis G = graver_basis(P.A.entries, gopts);

    SolveReport rep;
    rep.maxStepNorm = 0;
    while (true) {
        // Best improving step over all basis elements: for each g the
        // improvement grows linearly in lambda, so lambda is the largest
        // box-feasible step length.
        const IntVec* best_g = nullptr;
        Int best_lambda, best_gain;
        for (const auto& g : G.elements) {
            Int gain_unit = -dot(P.c, g);
            if (gain_unit <= 0) continue;
            // largest lambda >= 1 with x + lambda g inside the box
            bool feasible = true;
            std::optional<Int> lam;
            for (std::size_t j = 0; j < N && feasible; ++j) {
                if (g[j] == 0) continue;
                Int room = (g[j] > 0) ? (box.hi[j] - x[j]) : (x[j] - box.lo[j]);
                Int step = room / int_abs(g[j]);
                if (step <= 0) feasible = false;
                else if (!lam || step < *lam) lam = step;
            }
            if (!feasible || !lam) continue;
            Int gain = gain_unit * *lam;
            if (!best_g || gain > best_gain ||
                (gain == best_gain && (*lam < best_lambda ||
                                       (*lam == best_lambda && g < *best_g)))) {
                best_g = &g;
                best_lambda = *lam;
                best_gain = gain;
            }
        }
        if (!best_g) break;
        for (std::size_t j = 0; j < N; ++j) x[j] += best_lambda * (*best_g)[j];
        rep.steps.emplace_back(*best_g, best_lambda);
        Int norm = inf_norm(*best_g) * best_lambda;
        if (norm > rep.maxStepNorm) rep.maxStepNorm = norm;
    }

    rep.status = SolveStatus::Optimal;
    rep.x = std::move(x);
    rep.objective = dot(P.c, rep.x);
    return rep;
}

ProximityReport proximity_experiment(const Program& P, const MultistageTree& tree, const Box& box,
                                     std::uint64_t budget) {
    const std::size_t N = P.A.entries.cols;
    ProximityReport rep;
    rep.d = tree.dims.d[0];
    rep.t = tree.dims.t;
    rep.delta = P.A.delta;
    rep.columnBound = int_pow(Int(N) * P.A.delta, Int(N) + 1);

    RatVec lo(N), hi(N), c(N);
    for (std::size_t j = 0; j < N; ++j) {
        lo[j] = Rational(box.lo[j]);
        hi[j] = Rational(box.hi[j]);
        c[j] = Rational(P.c[j]);
    }
    RatVec b(P.b.size());
    for (std::size_t i = 0; i < P.b.size(); ++i) b[i] = Rational(P.b[i]);

    LpResult lp = simplex_solve_boxed(to_rational(P.A.entries), b, c, Sense::Min, lo, hi);
    if (lp.status != LpStatus::Optimal) {
        rep.status = lp.status == LpStatus::Infeasible ? SolveStatus::Infeasible
                                                       : SolveStatus::Unbounded;
        return rep;
    }
    rep.xFrac = lp.vertex;

    SolveReport ilp = brute_force_ilp(P, box, budget);
    if (ilp.status != SolveStatus::Optimal) {
        rep.status = ilp.status;
        return rep;
    }

    // Among the optimal integral points, the closest to the LP vertex in
    // the max norm; ties lexicographic (enumeration order).
    IntVec x = box.lo;
    std::optional<IntVec> best;
    Rational best_dist;
    do {
        if (mat_vec(P.A.entries, x) != P.b) continue;
        if (dot(P.c, x) != ilp.objective) continue;
        Rational dist;
        for (std::size_t j = 0; j < N; ++j) {
            Rational a = (Rational(x[j]) - rep.xFrac[j]).abs();
            if (a > dist) dist = a;
        }
        if (!best || dist < best_dist) {
            best = x;
            best_dist = dist;
        }
    } while (advance_box(x, box));

    rep.status = SolveStatus::Optimal;
    rep.xInt = std::move(*best);
    rep.distInf = std::move(best_dist);
    return rep;
}

GraverNormReport graver_norm_experiment(const MultistageMatrix& A, const MultistageTree& tree,
                                        const GraverOptions& gopts) {
    GraverNormReport rep;
    const std::size_t N = A.entries.cols;
    GraverBasis G = graver_basis(A.entries, gopts);
    rep.gInf = graver_complexity(G, Norm::LInf);
    rep.columnBound = G.norm_bound;
    rep.basisSize = G.elements.size();
    rep.d = tree.dims.d[0];
    rep.t = tree.dims.t;
    rep.delta = A.delta;
    // The multistage bound is doubly exponential with an unspecified
    // O-constant; report it symbolically with the exponent tower filled in.
    Int dDelta = Int(rep.d) * rep.delta;
    Int expo = int_pow(Int(rep.d), Int(3) * Int(rep.t) + 1);
    rep.structuralBound =
        "2^((" + dDelta.str() + ")^O(" + expo.str() + "))";
    return rep;
}

}  // namespace msip
