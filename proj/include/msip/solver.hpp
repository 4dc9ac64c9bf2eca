#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "msip/graver.hpp"
#include "msip/multistage.hpp"
#include "msip/simplex.hpp"

namespace msip {

enum class SolveStatus { Optimal, Infeasible, Unbounded, BudgetExceeded };

const char* to_string(SolveStatus s);

/// Finite per-variable enumeration region. Oracle-backed operations
/// insist on one; there are no silent default boxes.
struct Box {
    IntVec lo;
    IntVec hi;
};

/// Uniform box [lo, hi]^N intersected with the program's own bounds
/// (missing lower bound = 0, missing upper = +infinity). Throws
/// InputError when any coordinate stays unbounded or the scalar pair is
/// inverted.
Box effective_box(const Program& P, const std::optional<Int>& lo, const std::optional<Int>& hi);

struct SolveReport {
    SolveStatus status = SolveStatus::Infeasible;
    IntVec x;        // iff Optimal
    Int objective;   // iff Optimal
    std::vector<std::pair<IntVec, Int>> steps;  // (graver element, step length)
    Int maxStepNorm;
};

/// Exact optimum by enumerating the box lexicographically; ties go to the
/// first point in enumeration order.
SolveReport brute_force_ilp(const Program& P, const Box& box, std::uint64_t budget = 50'000'000);

/// First feasible point in lexicographic enumeration order.
std::optional<IntVec> find_feasible(const Program& P, const Box& box,
                                    std::uint64_t budget = 50'000'000);

/// Graver-best augmentation: from a feasible start, repeatedly apply the
/// step lambda * g maximizing the objective improvement (ties: smaller
/// lambda, then lexicographically smaller g) until no step improves.
/// The start defaults to find_feasible.
SolveReport solve_augmentation(const Program& P, const Box& box,
                               const std::optional<IntVec>& start = std::nullopt,
                               const GraverOptions& gopts = {},
                               std::uint64_t budget = 50'000'000);

/// LP vertex vs nearest optimal integral solution, with the
/// column-count proximity bound (N Delta)^{N+1} for context.
struct ProximityReport {
    SolveStatus status = SolveStatus::Infeasible;
    RatVec xFrac;
    IntVec xInt;
    Rational distInf;
    Int columnBound;  // (N Delta)^{N+1}
    int d = 0;
    int t = 0;
    Int delta;
};

/// xFrac: deterministic LP vertex over the boxed relaxation. xInt: among
/// the box ILP optima, the one minimizing |x - xFrac|_inf, ties broken
/// lexicographically.
ProximityReport proximity_experiment(const Program& P, const MultistageTree& tree, const Box& box,
                                     std::uint64_t budget = 50'000'000);

struct GraverNormReport {
    Int gInf;
    Int columnBound;  // (2 N Delta + 1)^N
    std::size_t basisSize = 0;
    int d = 0;
    int t = 0;
    Int delta;
    std::string structuralBound;  // the multistage bound, kept symbolic
};

GraverNormReport graver_norm_experiment(const MultistageMatrix& A, const MultistageTree& tree,
                                        const GraverOptions& gopts = {});

}  // namespace msip
