#include "msip/bounds.hpp"

namespace msip {

BoundTable bound_constants(int d, const Int& delta, int t, const Rational& rho, long k1,
                           const Int& lcm_budget) {
    if (d < 1) throw InputError("bound_constants: d must be >= 1");
    if (delta < 1) throw InputError("bound_constants: delta must be >= 1");
    if (t < 0) throw InputError("bound_constants: t must be >= 0");
    if (rho.sign() <= 0) throw InputError("bound_constants: rho must be positive");
    if (k1 < 1) throw InputError("bound_constants: K1 must be >= 1");

    BoundTable tab;
    tab.d = d;
    tab.delta = delta;
    tab.t = t;
    tab.rho = rho;
    tab.k1 = k1;

    const Int base = Int(d) * delta;

    // Exponents d^{3i} grow triple-exponentially; refuse to materialize
    // numbers beyond any radix representation.
    Int top_exp = int_pow(Int(d), Int(3) * Int(t));
    if (top_exp > Int(100'000'000))
        throw BudgetError("bound_constants: ladder exponent too large to materialize");

    for (int i = 0; i <= t; ++i)
        tab.Delta.push_back(int_pow(base, int_pow(Int(d), Int(3) * Int(i))));

    // nu = lcm(1 .. (d Delta_{t-1})^d); the empty range at t = 0 gives 1.
    tab.nu = 1;
    if (t >= 1) {
        Int cap = int_pow(Int(d) * tab.Delta[static_cast<std::size_t>(t - 1)], Int(d));
        if (cap > lcm_budget)
            throw BudgetError("bound_constants: lcm cap " + cap.str() + " exceeds budget " +
                              lcm_budget.str());
        for (Int k = 2; k <= cap; ++k) tab.nu = int_lcm(tab.nu, k);
    }

    const Int& Dt = tab.Delta[static_cast<std::size_t>(t)];
    for (int i = 0; i <= t; ++i) {
        tab.alpha.push_back(int_pow(tab.nu, Int(i)));
        tab.beta.push_back(int_pow(Dt, Int(2) * Int(i) * Int(d) * Int(d)));
        tab.D.push_back(tab.alpha.back() * tab.beta.back());
        tab.rhoLadder.push_back(
            rho * Rational(int_pow(Int(d) * Dt, Int(i) * Int(k1) * Int(d) * Int(d))));
    }

    // Delta_t^{2t} d^t (Delta_t^{d+1}(alpha_t beta_t + rho_t) + 4 t rho_t + 2 t D_t)
    const Rational rho_t = tab.rhoLadder.back();
    const Int& D_t = tab.D.back();
    Rational inner = Rational(int_pow(Dt, Int(d) + 1)) *
                         (Rational(tab.alpha.back() * tab.beta.back()) + rho_t) +
                     Rational(4 * t) * rho_t + Rational(2 * t) * Rational(D_t);
    tab.threshold = Rational(int_pow(Dt, Int(2) * Int(t))) * Rational(int_pow(Int(d), Int(t))) * inner;
    return tab;
}

}  // namespace msip
