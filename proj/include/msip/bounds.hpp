#pragma once

#include "msip/rational.hpp"

namespace msip {

/// The ladder of structural bound constants for given (d, delta, t):
///   Delta_i = (d delta)^(d^{3i})            element bound at height i
///   nu      = lcm(1 .. (d Delta_{t-1})^d)   denominator clearing factor
///   alpha_i = nu^i, beta_i = Delta_t^(2 i d^2), D_i = alpha_i beta_i
///   rho_i   = rho (d Delta_t)^(i K1 d^2)    deviation ladder
/// plus the composite threshold
///   Delta_t^{2t} d^t (Delta_t^{d+1}(alpha_t beta_t + rho_t)
///                     + 4 t rho_t + 2 t D_t).
/// Everything is exact; K1 is a reporting constant, default 1.
struct BoundTable {
    int d = 0;
    Int delta;
    int t = 0;
    Rational rho;
    long k1 = 1;

    std::vector<Int> Delta;      // i = 0..t
    Int nu;
    std::vector<Int> alpha;      // i = 0..t
    std::vector<Int> beta;       // i = 0..t
    std::vector<Int> D;          // i = 0..t
    std::vector<Rational> rhoLadder;  // i = 0..t
    Rational threshold;
};

/// Evaluates the ladder exactly. For t = 0 the lcm range is empty and
/// nu = 1. Throws BudgetError when the lcm cap (d Delta_{t-1})^d exceeds
/// lcm_budget; such values cannot be materialized.
BoundTable bound_constants(int d, const Int& delta, int t, const Rational& rho = Rational(1),
                           long k1 = 1, const Int& lcm_budget = Int(1'000'000));

}  // namespace msip
