#include "msip/graver.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace msip {

bool conformal_leq(const IntVec& x, const IntVec& y) {
    if (x.size() != y.size()) throw InputError("conformal_leq: dimension mismatch");
    for (std::size_t j = 0; j < x.size(); ++j) {
        if (x[j] * y[j] < 0) return false;
        if (int_abs(x[j]) > int_abs(y[j])) return false;
    }
    return true;
}

bool sign_compatible(const IntVec& x, const IntVec& y) {
    if (x.size() != y.size()) throw InputError("sign_compatible: dimension mismatch");
    for (std::size_t j = 0; j < x.size(); ++j)
        if (x[j] * y[j] < 0) return false;
    return true;
}

namespace {

// Subtract conformally dominated elements of g_set until none applies.
// Each subtraction removes the largest conformal multiple at once; the
// result does not depend on that shortcut, only the work does.
IntVec normal_form(IntVec r, const std::vector<IntVec>& g_set) {
    bool changed = true;
    while (changed && !is_zero(r)) {
        changed = false;
        for (const auto& g : g_set) {
            if (!conformal_leq(g, r)) continue;
            Int steps;
            bool first = true;
            for (std::size_t j = 0; j < g.size(); ++j) {
                if (g[j] == 0) continue;
                Int q = int_abs(r[j]) / int_abs(g[j]);
                if (first || q < steps) { steps = q; first = false; }
            }
            for (std::size_t j = 0; j < g.size(); ++j) r[j] -= steps * g[j];
            changed = true;
            if (is_zero(r)) break;
        }
    }
    return r;
}

}  // namespace

GraverBasis graver_basis(const IntMatrix& A, const GraverOptions& opts) {
    const std::size_t m = A.cols;
    Int delta = max_abs(A);
    Int norm_bound = int_pow(Int(2) * Int(m) * delta + 1, Int(m));
    if (norm_bound > opts.bound_budget)
        throw BudgetError("graver_basis: certified norm bound " + norm_bound.str() +
                          " exceeds budget " + opts.bound_budget.str());

    std::vector<IntVec> gens;
    std::set<IntVec> seen;
    auto push = [&](const IntVec& v) {
        if (is_zero(v) || seen.count(v)) return false;
        seen.insert(v);
        gens.push_back(v);
        return true;
    };

    for (const auto& v : kernel_lattice_basis(A)) {
        push(v);
        push(negate(v));
    }

    std::deque<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < gens.size(); ++i)
        for (std::size_t j = i; j < gens.size(); ++j) pairs.emplace_back(i, j);

    std::uint64_t work = 0;
    while (!pairs.empty()) {
        if (++work > opts.iteration_budget)
            throw BudgetError("graver_basis: completion exceeded the iteration budget");
        auto [i, j] = pairs.front();
        pairs.pop_front();
        IntVec r = normal_form(add(gens[i], gens[j]), gens);
        if (push(r)) {
            std::size_t k = gens.size() - 1;
            for (std::size_t h = 0; h <= k; ++h) pairs.emplace_back(h, k);
        }
    }

    // Keep only conformally minimal elements.
    std::vector<IntVec> minimal;
    for (const auto& g : gens) {
        bool reducible = false;
        for (const auto& h : gens) {
            if (h == g) continue;
            if (conformal_leq(h, g)) { reducible = true; break; }
        }
        if (!reducible) minimal.push_back(g);
    }
    std::sort(minimal.begin(), minimal.end());

    GraverBasis G;
    G.matrix = A;
    G.elements = std::move(minimal);
    G.norm_bound = std::move(norm_bound);
    return G;
}

Int graver_complexity(const GraverBasis& G, Norm p) {
    Int best = 0;
    for (const auto& g : G.elements) {
        Int v = (p == Norm::LInf) ? inf_norm(g) : one_norm(g);
        if (v > best) best = v;
    }
    return best;
}

ConformalDecomposition conformal_decompose(const GraverBasis& G, const IntVec& y) {
    if (y.size() != G.matrix.cols) throw InputError("conformal_decompose: dimension mismatch");
    if (!is_zero(mat_vec(G.matrix, y)))
        throw InputError("conformal_decompose: target is not in the kernel");

    auto abs_key = [](const IntVec& v) {
        IntVec k(v.size());
        for (std::size_t i = 0; i < v.size(); ++i) k[i] = int_abs(v[i]);
        return k;
    };

    ConformalDecomposition dec;
    dec.target = y;
    IntVec r = y;
    while (!is_zero(r)) {
        const IntVec* pick = nullptr;
        IntVec pick_key;
        for (const auto& g : G.elements) {
            if (!conformal_leq(g, r)) continue;
            IntVec key = abs_key(g);
            if (!pick || key < pick_key) {
                pick = &g;
                pick_key = std::move(key);
            }
        }
        // A complete basis decomposes every kernel vector.
        if (!pick)
            throw std::logic_error("conformal_decompose: no conformal element applies");
        Int steps;
        bool first = true;
        for (std::size_t j = 0; j < pick->size(); ++j) {
            if ((*pick)[j] == 0) continue;
            Int q = int_abs(r[j]) / int_abs((*pick)[j]);
            if (first || q < steps) { steps = q; first = false; }
        }
        for (std::size_t j = 0; j < r.size(); ++j) r[j] -= steps * (*pick)[j];
        dec.parts.emplace_back(*pick, steps);
    }
    return dec;
}

}  // namespace msip
