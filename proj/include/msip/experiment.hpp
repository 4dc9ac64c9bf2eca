#pragma once

#include <optional>
#include <string>

#include "msip/generator.hpp"
#include "msip/solver.hpp"

namespace msip {

/// One CSV row of the experiment sweep. Fields not applicable to the
/// instance (LP infeasible, solve not optimal) stay empty and print NA.
struct ExperimentRow {
    std::string instance_id;
    int d = 0;
    int t = 0;
    Int delta;
    int n = 0;
    int N = 0;
    std::optional<Int> g_inf;
    Int column_bound;
    std::optional<Rational> dist_inf;
    Int lemma_bound;  // (N Delta)^{N+1}
    std::optional<std::size_t> steps;
    std::optional<Int> max_step_norm;
};

/// Runs the Graver-norm, proximity, and augmentation experiments on one
/// instance with a uniform [lo, hi] box.
ExperimentRow run_experiments(const std::string& id, const Program& P, const Int& box_lo,
                              const Int& box_hi, std::uint64_t budget = 50'000'000);

std::string csv_header();
std::string to_csv(const ExperimentRow& row);

/// The seeded sweep corpus: `count` instances cycling through a fixed
/// family of desk-scale shapes, with per-instance seeds derived from the
/// sweep seed.
std::vector<GenParams> sweep_corpus(std::uint64_t seed, int count);

/// Generated sweep instances. Every other instance gets its right-hand
/// side recomputed as A x0 for a deterministic x0 in [0,3]^N, so half the
/// corpus is feasible in the standard box by construction.
std::vector<std::pair<std::string, Program>> sweep_instances(std::uint64_t seed, int count);

}  // namespace msip
