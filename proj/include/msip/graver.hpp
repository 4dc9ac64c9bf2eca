#pragma once

#include <cstdint>
#include <utility>

#include "msip/linalg.hpp"

namespace msip {

/// Conformal (sign-compatible, componentwise-dominated) partial order:
/// x_j y_j >= 0 and |x_j| <= |y_j| for every j.
bool conformal_leq(const IntVec& x, const IntVec& y);

/// x_j y_j >= 0 for every j.
bool sign_compatible(const IntVec& x, const IntVec& y);

struct GraverOptions {
    /// Reject upfront when the certified norm bound (2 m |A| + 1)^m
    /// exceeds this; keeps absurd inputs from starting at all.
    Int bound_budget = Int("1000000000000");
    /// Hard cap on completion-queue work.
    std::uint64_t iteration_budget = 20'000'000;
};

/// The set of conformally minimal nonzero integer kernel vectors of a
/// matrix, closed under negation, elements sorted lexicographically.
struct GraverBasis {
    IntMatrix matrix;
    std::vector<IntVec> elements;
    Int norm_bound;  // (2 m |A| + 1)^m, m = columns
};

/// Completion procedure: seed with a lattice basis of ker_Z(A) closed
/// under negation, generate pairwise sums, reduce each to conformal
/// normal form, close, then prune non-minimal elements. Deterministic.
/// Throws BudgetError rather than ever truncating.
GraverBasis graver_basis(const IntMatrix& A, const GraverOptions& opts = {});

enum class Norm { L1, LInf };

/// Largest element norm; 0 for an empty basis.
Int graver_complexity(const GraverBasis& G, Norm p);

/// Multiset of basis elements with multiplicities, summing to the target.
struct ConformalDecomposition {
    IntVec target;
    std::vector<std::pair<IntVec, Int>> parts;  // (element, multiplicity), extraction order
};

/// Greedy conformal decomposition of a kernel vector y: repeatedly
/// subtract the conformally-dominated basis element with the smallest
/// absolute-value-lexicographic key. The key is unique among candidates,
/// and negating y negates every part. Throws InputError when Ay != 0.
ConformalDecomposition conformal_decompose(const GraverBasis& G, const IntVec& y);

}  // namespace msip
