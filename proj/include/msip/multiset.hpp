#pragma once

#include <cstdint>
#include <map>
#include <optional>

#include "msip/graver.hpp"
#include "msip/multistage.hpp"

namespace msip {

/// Multiset of integer points represented by a multiplicity vector.
/// Multiplicities are exact nonnegative rationals; zero multiplicities
/// are never stored.
struct Multiset {
    std::map<IntVec, Rational> mult;

    bool empty() const { return mult.empty(); }

    /// 0 when the point is absent.
    Rational at(const IntVec& p) const;

    /// Adds (or removes, for negative q) multiplicity; the result must
    /// stay nonnegative.
    void add(const IntVec& p, const Rational& q);

    /// sum_p mult_p * p.
    RatVec sum(std::size_t dim) const;

    /// Total multiplicity (the multiset's cardinality).
    Rational cardinality() const;

    bool integral() const;

    bool operator==(const Multiset& o) const = default;
};

/// rho-validity: for every leaf i, |sum(T_i) - pi(i, b)|_inf < rho,
/// strictly. b ranges over all columns of the matrix.
bool rho_valid(const MultistageTree& tree, const RatVec& b, const Rational& rho,
               const std::vector<Multiset>& T);

/// Witness for the kernel characterization: decomposes every leaf
/// projection of a kernel vector y against the leaf subprogram's Graver
/// basis. The result is valid (rho = 1) regarding y, and each multiset's
/// elements are pairwise sign-compatible. Throws InputError when Ay != 0.
std::vector<Multiset> valid_witness_from_kernel(const Program& P, const MultistageTree& tree,
                                                const IntVec& y, const GraverOptions& opts = {});

/// Not-all-empty submultisets valid regarding an integral bhat.
struct SubmultisetWitness {
    std::vector<Multiset> S;
    IntVec bhat;  // over all columns of the matrix
};

/// Exhaustive existence oracle: searches every combination of
/// submultisets S_i <= T_i with |S_i| <= max_card, returns the witness
/// minimizing (max_i |S_i|, total cardinality, lexicographic multiplicity
/// vectors), or nullopt when none exists. Inputs must be integral
/// multisets of pairwise sign-compatible elements bounded by delta.
std::optional<SubmultisetWitness> find_small_valid_submultisets(
    const MultistageTree& tree, const std::vector<Multiset>& T, const Int& delta, long max_card,
    std::uint64_t budget = 50'000'000);

/// One common extracted element: bhat together with, per input multiset,
/// a basis of bounded integer columns and the fractional multiplicities
/// x = B^{-1} bhat it uses.
struct SingleElementResult {
    IntVec bhat;
    std::vector<IntMatrix> bases;
    std::vector<RatVec> x;
};

/// Searches nonzero bhat with |bhat|_inf <= (d delta)^{d^2} in increasing
/// max-norm (then lexicographic) order; for each candidate and each
/// multiset, scans d-subsets of the delta-box as basis columns and accepts
/// the first with 0 <= B^{-1} bhat <= lambda. Returns nullopt when the
/// whole space is exhausted.
std::optional<SingleElementResult> single_element(const std::vector<Multiset>& lambdas,
                                                  const RatVec& b, const Rational& rho,
                                                  const Int& delta,
                                                  std::uint64_t budget = 200'000'000);

/// Accumulated extractions of repeated single_element calls.
struct AlmostPartition {
    struct Entry {
        IntMatrix basis;
        std::size_t index;  // which input multiset
        Multiset lam;       // integral multiplicities over extracted bhat values
    };
    std::vector<Entry> family;                 // sorted by (index, basis)
    Multiset lambda_total;                     // sum over bases, equal for every index
    std::vector<std::pair<IntVec, Int>> extracted;  // bhat sequence, run-length encoded
    RatVec residual;                           // b minus everything extracted
};

/// Iterates single_element, subtracting each extraction from the working
/// vector and multisets, until the search returns nothing.
AlmostPartition almost_partition(const std::vector<Multiset>& lambdas, const RatVec& b,
                                 const Rational& rho, const Int& delta,
                                 std::uint64_t budget = 200'000'000);

}  // namespace msip
