#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "msip/experiment.hpp"
#include "msip/json_io.hpp"
#include "msip/reports.hpp"

using namespace msip;

namespace {

// Exit codes: 0 ok, 1 domain error, 2 usage error, 3 budget exceeded.
constexpr int kOk = 0;
constexpr int kDomainError = 1;
constexpr int kUsageError = 2;
constexpr int kBudgetError = 3;

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_output(const std::string& path, const std::string& payload) {
    if (path.empty()) {
        std::cout << payload;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("cannot write '" + path + "'");
    out << payload;
}

int run(int argc, char** argv) {
    CLI::App app{"exact toolkit for multistage stochastic integer programs"};
    app.require_subcommand(1);
    std::uint64_t budget = 50'000'000;
    app.add_option("--budget", budget, "global cap on enumeration sizes");

    std::string file, out_path;
    std::string format = "text";

    auto* validate = app.add_subcommand("validate", "check the block structure, print the tree");
    validate->add_option("instance", file)->required();

    auto* graver = app.add_subcommand("graver", "Graver basis of the matrix or a subprogram");
    int submatrix = 0;
    graver->add_option("instance", file)->required();
    graver->add_option("--submatrix", submatrix, "leaf index i: use A_i instead of A");
    graver->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

    auto* solve = app.add_subcommand("solve", "solve an instance over an explicit box");
    std::string method = "augment";
    long long box_lo = 0, box_hi = 0;
    solve->add_option("instance", file)->required();
    solve->add_option("--method", method)->check(CLI::IsMember({"augment", "brute"}));
    solve->add_option("--box-lo", box_lo)->required();
    solve->add_option("--box-hi", box_hi)->required();

    auto* proximity = app.add_subcommand("proximity", "LP vertex vs nearest integral optimum");
    proximity->add_option("instance", file)->required();
    proximity->add_option("--box-lo", box_lo)->required();
    proximity->add_option("--box-hi", box_hi)->required();

    auto* graver_exp = app.add_subcommand("graver-exp", "Graver complexity vs certified bounds");
    graver_exp->add_option("instance", file)->required();

    auto* lemma42 = app.add_subcommand("lemma42", "smallest valid submultisets, exhaustively");
    long max_card = 8;
    lemma42->add_option("multisets", file)->required();
    lemma42->add_option("--max-card", max_card)->required();

    auto* bounds = app.add_subcommand("bounds", "the structural bound ladder, exactly");
    int bd = 0, bt = 0;
    long long bdelta = 1;
    long k1 = 1;
    std::string rho_text = "1";
    bounds->add_option("--d", bd)->required();
    bounds->add_option("--delta", bdelta)->required();
    bounds->add_option("--t", bt)->required();
    bounds->add_option("--k1", k1);
    bounds->add_option("--rho", rho_text);
    bounds->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

    auto* gen = app.add_subcommand("gen", "generate a seeded instance");
    GenParams gp;
    std::vector<int> widths;
    gen->add_option("--t", gp.t)->required();
    gen->add_option("--s", widths, "columns per depth, comma separated")
        ->required()
        ->delimiter(',');
    gen->add_option("--branching", gp.branching);
    gen->add_option("--r", gp.r);
    gen->add_option("--delta", gp.delta);
    gen->add_option("--seed", gp.seed)->required();
    gen->add_option("--b-lo", gp.bLo);
    gen->add_option("--b-hi", gp.bHi);
    gen->add_option("--c-lo", gp.cLo);
    gen->add_option("--c-hi", gp.cHi);
    gen->add_option("-o,--out", out_path);

    auto* sweep = app.add_subcommand("sweep", "run the experiment trio over a seeded corpus");
    std::uint64_t sweep_seed = 1;
    int sweep_count = 12;
    sweep->add_option("--seed", sweep_seed);
    sweep->add_option("--count", sweep_count);
    sweep->add_option("--box-lo", box_lo)->required();
    sweep->add_option("--box-hi", box_hi)->required();
    sweep->add_option("-o,--out", out_path);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsageError;
    }

    if (validate->parsed()) {
        Program P = parse_program(read_file(file));
        std::cout << tree_summary_json(P, build_tree(P.A));
        return kOk;
    }

    if (graver->parsed()) {
        Program P = parse_program(read_file(file));
        IntMatrix target = P.A.entries;
        if (submatrix != 0) {
            MultistageTree tree = build_tree(P.A);
            target = leaf_subprogram(P, tree, submatrix).A;
        }
        GraverBasis basis = graver_basis(target);
        if (format == "json") {
            std::cout << graver_json(basis);
        } else {
            for (const auto& e : basis.elements) std::cout << str(e) << "\n";
            std::cout << "g_inf = " << graver_complexity(basis, Norm::LInf) << "\n";
            std::cout << "bound = " << basis.norm_bound << "\n";
        }
        return kOk;
    }

    if (solve->parsed()) {
        Program P = parse_program(read_file(file));
        Box box = effective_box(P, Int(box_lo), Int(box_hi));
        SolveReport rep = (method == "brute")
                              ? brute_force_ilp(P, box, budget)
                              : solve_augmentation(P, box, std::nullopt, {}, budget);
        std::cout << solve_report_json(rep);
        return rep.status == SolveStatus::BudgetExceeded ? kBudgetError : kOk;
    }

    if (proximity->parsed()) {
        Program P = parse_program(read_file(file));
        MultistageTree tree = build_tree(P.A);
        Box box = effective_box(P, Int(box_lo), Int(box_hi));
        ProximityReport rep = proximity_experiment(P, tree, box, budget);
        std::cout << proximity_json(rep);
        return rep.status == SolveStatus::BudgetExceeded ? kBudgetError : kOk;
    }

    if (graver_exp->parsed()) {
        Program P = parse_program(read_file(file));
        MultistageTree tree = build_tree(P.A);
        std::cout << graver_norm_json(graver_norm_experiment(P.A, tree));
        return kOk;
    }

    if (lemma42->parsed()) {
        MultisetFile f = parse_multiset_file(read_file(file));
        MultistageTree tree = build_tree(f.matrix);
        auto witness = find_small_valid_submultisets(tree, f.sets, f.delta, max_card, budget);
        std::cout << lemma42_json(witness, max_card);
        return kOk;
    }

    if (bounds->parsed()) {
        BoundTable tab = bound_constants(bd, Int(bdelta), bt, Rational::parse(rho_text), k1);
        if (format == "json") {
            std::cout << bound_table_json(tab);
        } else {
            for (std::size_t i = 0; i < tab.Delta.size(); ++i)
                std::cout << "Delta_" << i << " = " << tab.Delta[i] << "\n";
            std::cout << "nu = " << tab.nu << "\n";
            for (std::size_t i = 0; i < tab.alpha.size(); ++i)
                std::cout << "alpha_" << i << " = " << tab.alpha[i] << "\n";
            for (std::size_t i = 0; i < tab.beta.size(); ++i)
                std::cout << "beta_" << i << " = " << tab.beta[i] << "\n";
            for (std::size_t i = 0; i < tab.D.size(); ++i)
                std::cout << "D_" << i << " = " << tab.D[i] << "\n";
            for (std::size_t i = 0; i < tab.rhoLadder.size(); ++i)
                std::cout << "rho_" << i << " = " << tab.rhoLadder[i].str() << "\n";
            std::cout << "threshold = " << tab.threshold.str() << "\n";
        }
        return kOk;
    }

    if (gen->parsed()) {
        gp.s = widths;
        write_output(out_path, serialize_program(generate(gp)));
        return kOk;
    }

    if (sweep->parsed()) {
        std::ostringstream csv;
        csv << csv_header() << "\n";
        for (const auto& [id, P] : sweep_instances(sweep_seed, sweep_count))
            csv << to_csv(run_experiments(id, P, Int(box_lo), Int(box_hi), budget)) << "\n";
        write_output(out_path, csv.str());
        return kOk;
    }

    return kUsageError;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const BudgetError& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return kBudgetError;
    } catch (const StructureError& e) {
        std::cerr << "invalid structure [" << to_string(e.code()) << "]: " << e.what() << "\n";
        return kDomainError;
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kDomainError;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kDomainError;
    }
}
