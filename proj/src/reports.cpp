#include "msip/reports.hpp"

#include <json.hpp>

namespace msip {

namespace {

using nlohmann::json;

json json_vec(const IntVec& v) {
    json a = json::array();
    for (const Int& x : v) a.push_back(x.str());
    return a;
}

json json_vec(const RatVec& v) {
    json a = json::array();
    for (const Rational& x : v) a.push_back(x.str());
    return a;
}

json json_multiset(const Multiset& s) {
    json set = json::array();
    for (const auto& [p, q] : s.mult) {
        json e;
        e["v"] = json_vec(p);
        e["mult"] = q.str();
        set.push_back(std::move(e));
    }
    return set;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace

std::string tree_summary_json(const Program& P, const MultistageTree& tree) {
    json out;
    out["valid"] = true;
    out["m"] = P.A.entries.rows;
    out["N"] = P.A.entries.cols;
    out["t"] = tree.dims.t;
    out["n"] = tree.dims.n;
    out["r"] = tree.dims.r;
    out["s"] = tree.dims.s;
    out["d"] = tree.dims.d;
    out["delta"] = P.A.delta.str();
    json leaves = json::array();
    for (int i = 1; i <= tree.dims.n; ++i) {
        json leaf;
        leaf["number"] = i;
        json cols = json::array();
        for (int c : path_columns(tree, i)) cols.push_back(c + 1);
        leaf["path_cols"] = std::move(cols);
        leaves.push_back(std::move(leaf));
    }
    out["leaves"] = std::move(leaves);
    out["partitions"] = tree_partitions(tree);
    return dump(out);
}

std::string graver_json(const GraverBasis& basis) {
    json out;
    json elems = json::array();
    for (const auto& e : basis.elements) elems.push_back(json_vec(e));
    out["elements"] = std::move(elems);
    out["g_inf"] = graver_complexity(basis, Norm::LInf).str();
    out["g_1"] = graver_complexity(basis, Norm::L1).str();
    out["norm_bound"] = basis.norm_bound.str();
    return dump(out);
}

std::string solve_report_json(const SolveReport& rep) {
    json out;
    out["status"] = to_string(rep.status);
    if (rep.status == SolveStatus::Optimal) {
        out["x"] = json_vec(rep.x);
        out["objective"] = rep.objective.str();
        json steps = json::array();
        for (const auto& [g, lam] : rep.steps) {
            json s;
            s["g"] = json_vec(g);
            s["lambda"] = lam.str();
            steps.push_back(std::move(s));
        }
        out["steps"] = std::move(steps);
        out["max_step_norm"] = rep.maxStepNorm.str();
    }
    return dump(out);
}

std::string proximity_json(const ProximityReport& rep) {
    json out;
    out["status"] = to_string(rep.status);
    out["lemma33_bound"] = rep.columnBound.str();
    out["params"] = {{"d", rep.d}, {"t", rep.t}, {"delta", rep.delta.str()}};
    if (rep.status == SolveStatus::Optimal) {
        out["x_frac"] = json_vec(rep.xFrac);
        out["x_int"] = json_vec(rep.xInt);
        out["dist_inf"] = rep.distInf.str();
    }
    return dump(out);
}

std::string graver_norm_json(const GraverNormReport& rep) {
    json out;
    out["g_inf"] = rep.gInf.str();
    out["column_bound"] = rep.columnBound.str();
    out["basis_size"] = rep.basisSize;
    out["params"] = {{"d", rep.d}, {"t", rep.t}, {"delta", rep.delta.str()}};
    out["structural_bound"] = rep.structuralBound;
    return dump(out);
}

std::string lemma42_json(const std::optional<SubmultisetWitness>& witness, long max_card) {
    json out;
    out["found"] = witness.has_value();
    out["max_card"] = max_card;
    if (witness) {
        json sets = json::array();
        for (const Multiset& s : witness->S) sets.push_back(json_multiset(s));
        out["S"] = std::move(sets);
        out["bhat"] = json_vec(witness->bhat);
    }
    return dump(out);
}

std::string bound_table_json(const BoundTable& tab) {
    json out;
    out["d"] = tab.d;
    out["delta"] = tab.delta.str();
    out["t"] = tab.t;
    out["k1"] = tab.k1;
    out["rho"] = tab.rho.str();
    json ladder = json::array(), alpha = json::array(), beta = json::array(),
         dcap = json::array(), rhol = json::array();
    for (const Int& v : tab.Delta) ladder.push_back(v.str());
    for (const Int& v : tab.alpha) alpha.push_back(v.str());
    for (const Int& v : tab.beta) beta.push_back(v.str());
    for (const Int& v : tab.D) dcap.push_back(v.str());
    for (const Rational& v : tab.rhoLadder) rhol.push_back(v.str());
    out["Delta"] = std::move(ladder);
    out["nu"] = tab.nu.str();
    out["alpha"] = std::move(alpha);
    out["beta"] = std::move(beta);
    out["D"] = std::move(dcap);
    out["rho_ladder"] = std::move(rhol);
    out["threshold"] = tab.threshold.str();
    return dump(out);
}

}  // namespace msip
