#include "msip/experiment.hpp"

#include <sstream>

namespace msip {

ExperimentRow run_experiments(const std::string& id, const Program& P, const Int& box_lo,
                              const Int& box_hi, std::uint64_t budget) {
    MultistageTree tree = build_tree(P.A);
    Box box = effective_box(P, box_lo, box_hi);

    ExperimentRow row;
    row.instance_id = id;
    row.d = tree.dims.d[0];
    row.t = tree.dims.t;
    row.delta = P.A.delta;
    row.n = tree.dims.n;
    row.N = static_cast<int>(P.A.entries.cols);

    GraverNormReport gn = graver_norm_experiment(P.A, tree);
    row.g_inf = gn.gInf;
    row.column_bound = gn.columnBound;

    ProximityReport px = proximity_experiment(P, tree, box, budget);
    row.lemma_bound = px.columnBound;
    if (px.status == SolveStatus::Optimal) row.dist_inf = px.distInf;

    SolveReport sv = solve_augmentation(P, box, std::nullopt, {}, budget);
    if (sv.status == SolveStatus::Optimal) {
        row.steps = sv.steps.size();
        row.max_step_norm = sv.maxStepNorm;
    }
    return row;
}

std::string csv_header() {
    return "instance_id,d,t,delta,n,N,g_inf,column_bound,dist_inf,lemma33_bound,steps,"
           "max_step_norm";
}

std::string to_csv(const ExperimentRow& row) {
    std::ostringstream os;
    os << row.instance_id << ',' << row.d << ',' << row.t << ',' << row.delta << ',' << row.n
       << ',' << row.N << ',';
    os << (row.g_inf ? row.g_inf->str() : "NA") << ',' << row.column_bound << ',';
    os << (row.dist_inf ? row.dist_inf->str() : "NA") << ',' << row.lemma_bound << ',';
    os << (row.steps ? std::to_string(*row.steps) : "NA") << ',';
    os << (row.max_step_norm ? row.max_step_norm->str() : "NA");
    return os.str();
}

std::vector<GenParams> sweep_corpus(std::uint64_t seed, int count) {
    if (count < 0) throw InputError("sweep_corpus: negative count");
    // Desk-scale shapes, all with N <= 7 columns.
    struct Shape {
        int t;
        std::vector<int> s;
        int branching;
        int r;
        int delta;
    };
    const std::vector<Shape> shapes = {
        {0, {3}, 1, 2, 1},
        {1, {1, 1}, 2, 1, 1},
        {1, {2, 1}, 2, 1, 2},
        {1, {1, 2}, 3, 1, 1},
        {2, {1, 1, 1}, 2, 1, 1},
        {2, {1, 1, 1}, 2, 1, 2},
    };

    std::vector<GenParams> corpus;
    SplitMix64 rng(seed);
    for (int i = 0; i < count; ++i) {
        const Shape& sh = shapes[static_cast<std::size_t>(i) % shapes.size()];
        GenParams p;
        p.t = sh.t;
        p.s = sh.s;
        p.branching = sh.branching;
        p.r = sh.r;
        p.delta = sh.delta;
        p.bLo = -3;
        p.bHi = 3;
        p.cLo = -3;
        p.cHi = 3;
        p.seed = rng.next();
        corpus.push_back(std::move(p));
    }
    return corpus;
}

std::vector<std::pair<std::string, Program>> sweep_instances(std::uint64_t seed, int count) {
    std::vector<std::pair<std::string, Program>> out;
    auto corpus = sweep_corpus(seed, count);
    for (std::size_t i = 0; i < corpus.size(); ++i) {
        Program P = generate(corpus[i]);
        if (i % 2 == 1) {
            IntVec x0(P.A.entries.cols);
            for (std::size_t j = 0; j < x0.size(); ++j) x0[j] = Int((i + j) % 4);
            P.b = mat_vec(P.A.entries, x0);
        }
        out.emplace_back("s" + std::to_string(seed) + "-" + std::to_string(i), std::move(P));
    }
    return out;
}

}  // namespace msip
