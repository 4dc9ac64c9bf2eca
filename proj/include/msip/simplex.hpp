#pragma once

#include "msip/linalg.hpp"

namespace msip {

enum class LpStatus { Optimal, Infeasible, Unbounded };

const char* to_string(LpStatus s);

/// Outcome of an exact LP solve. When Optimal, vertex is a basic feasible
/// solution (at most rank-many nonzeros) and value = c . vertex.
struct LpResult {
    LpStatus status = LpStatus::Infeasible;
    RatVec vertex;
    Rational value;
};

enum class Sense { Min, Max };

/// Exact primal simplex over {x >= 0 : Ax = b}, two phases, Bland's rule
/// throughout. Deterministic: identical inputs give the identical vertex.
LpResult simplex_solve(const RatMatrix& A, const RatVec& b, const RatVec& c, Sense sense);

/// Same polytope with finite variable bounds lo <= x <= hi, solved by
/// shifting to the nonnegative orthant and adding slack rows.
LpResult simplex_solve_boxed(const RatMatrix& A, const RatVec& b, const RatVec& c, Sense sense,
                             const RatVec& lo, const RatVec& hi);

struct ConeResult {
    bool member = false;
    RatVec certificate;  // lambda >= 0 with sum lambda_i c_i = b, when member
};

/// Is b a nonnegative combination of the generators? Phase-1 LP over the
/// certificate variables; exact.
ConeResult cone_member(const std::vector<IntVec>& generators, const RatVec& b);

}  // namespace msip
