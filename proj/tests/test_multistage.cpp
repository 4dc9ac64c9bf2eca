#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "msip/generator.hpp"
#include "msip/json_io.hpp"
#include "msip/multistage.hpp"
#include "support/fixtures.hpp"

using namespace msip;
using fixtures::iv;
using fixtures::make_matrix;

TEST_CASE("smallest two-stage instance validates") {
    Program P = fixtures::two_stage_pair();
    CHECK(P.A.delta == 1);
    MultistageTree tree = build_tree(P.A);
    CHECK(tree.dims.t == 1);
    CHECK(tree.dims.n == 2);
    CHECK(tree.dims.s == std::vector<int>{1, 1});
    CHECK(tree.dims.d == std::vector<int>{2, 1});
    CHECK(tree.nodes[tree.root].cols == std::vector<int>{0});
}

TEST_CASE("validation error codes") {
    auto entries = make_matrix(2, 3, {1, 1, 0, 1, 0, 1});

    SUBCASE("non-laminar rows") {
        auto e3 = make_matrix(3, 2, {1, 0, 1, 1, 0, 1});
        std::vector<Block> blocks = {{{0, 1}, {0}}, {{1, 2}, {1}}};
        try {
            validate_structure(e3, blocks);
            FAIL("expected StructureError");
        } catch (const StructureError& err) {
            CHECK(err.code() == StructureCode::NonLaminarRows);
        }
    }
    SUBCASE("column overlap") {
        std::vector<Block> blocks = {{{0, 1}, {0, 1}}, {{0}, {1}}, {{1}, {2}}};
        try {
            validate_structure(entries, blocks);
            FAIL("expected StructureError");
        } catch (const StructureError& err) {
            CHECK(err.code() == StructureCode::ColumnOverlap);
        }
    }
    SUBCASE("column uncovered") {
        std::vector<Block> blocks = {{{0, 1}, {0}}, {{0}, {1}}};
        try {
            validate_structure(entries, blocks);
            FAIL("expected StructureError");
        } catch (const StructureError& err) {
            CHECK(err.code() == StructureCode::ColumnUncovered);
        }
    }
    SUBCASE("nonzero outside block") {
        auto leaky = make_matrix(2, 3, {1, 1, 0, 1, 1, 1});
        std::vector<Block> blocks = {{{0, 1}, {0}}, {{0}, {1}}, {{1}, {2}}};
        try {
            validate_structure(leaky, blocks);
            FAIL("expected StructureError");
        } catch (const StructureError& err) {
            CHECK(err.code() == StructureCode::NonzeroOutsideBlock);
        }
    }
    SUBCASE("no root") {
        auto e = make_matrix(2, 2, {1, 0, 0, 1});
        std::vector<Block> blocks = {{{0}, {0}}, {{1}, {1}}};
        try {
            validate_structure(e, blocks);
            FAIL("expected StructureError");
        } catch (const StructureError& err) {
            CHECK(err.code() == StructureCode::NoRoot);
        }
    }
    SUBCASE("single block is a valid degenerate tree") {
        Program P = fixtures::single_block(make_matrix(1, 3, {1, 2, 3}), iv({1}), iv({0, 0, 0}));
        MultistageTree tree = build_tree(P.A);
        CHECK(tree.dims.t == 0);
        CHECK(tree.dims.n == 1);
        CHECK(tree.dims.s == std::vector<int>{3});
    }
}

TEST_CASE("unsupported shapes are rejected") {
    // leaves at depth 1 and 2
    auto e2 = make_matrix(3, 4, {1, 1, 0, 0, 1, 0, 1, 1, 1, 0, 1, 0});
    std::vector<Block> blocks2 = {
        {{0, 1, 2}, {0}}, {{0}, {1}}, {{1, 2}, {2}}, {{1}, {3}}};
    try {
        build_tree(validate_structure(e2, blocks2));
        FAIL("expected StructureError");
    } catch (const StructureError& err) {
        CHECK(err.code() == StructureCode::UnsupportedShape);
    }
    // same depth, different widths
    auto e3 = make_matrix(2, 4, {1, 1, 1, 0, 1, 0, 0, 1});
    std::vector<Block> blocks3 = {{{0, 1}, {0}}, {{0}, {1, 2}}, {{1}, {3}}};
    try {
        build_tree(validate_structure(e3, blocks3));
        FAIL("expected StructureError");
    } catch (const StructureError& err) {
        CHECK(err.code() == StructureCode::UnsupportedShape);
    }
}

TEST_CASE("leaf subprograms read off rows and path columns") {
    Program P = fixtures::two_stage_pair(iv({7, 9}), iv({5, 6, 8}));
    MultistageTree tree = build_tree(P.A);

    Subprogram s1 = leaf_subprogram(P, tree, 1);
    CHECK(s1.A.rows == 1);
    CHECK(s1.A.cols == 2);
    CHECK(s1.A.at(0, 0) == 1);
    CHECK(s1.A.at(0, 1) == 1);
    CHECK(s1.b == iv({7}));
    CHECK(s1.c == iv({5, 6}));

    Subprogram s2 = leaf_subprogram(P, tree, 2);
    CHECK(s2.b == iv({9}));
    CHECK(s2.c == iv({5, 8}));
    CHECK_THROWS_AS(leaf_subprogram(P, tree, 3), InputError);

    Program single = fixtures::single_block(make_matrix(1, 2, {1, 2}), iv({1}), iv({0, 0}));
    MultistageTree ts = build_tree(single.A);
    Subprogram s = leaf_subprogram(single, ts, 1);
    CHECK(s.A == single.A.entries);
}

TEST_CASE("projections") {
    Program P = fixtures::two_stage_pair();
    MultistageTree tree = build_tree(P.A);
    IntVec b = iv({5, 7, 9});

    CHECK(project(tree, 1, b) == iv({5, 7}));
    CHECK(project(tree, 2, b) == iv({5, 9}));
    CHECK(project_prefix(tree, 1, b, 1) == iv({5}));
    CHECK(project_prefix(tree, 1, b, 0) == project(tree, 1, b));
    CHECK(project_prefix(tree, 1, b, 1) == project_prefix(tree, 2, b, 1));
    CHECK(drop_last_stage(tree, project(tree, 2, b), 0) == iv({5}));
    CHECK_THROWS_AS(project_prefix(tree, 1, b, 2), InputError);
}

TEST_CASE("kernel decomposition across leaves") {
    // A x = 0 iff every leaf projection is in the leaf subprogram kernel
    Program P = fixtures::two_stage_pair();
    MultistageTree tree = build_tree(P.A);
    std::vector<Subprogram> subs;
    for (int i = 1; i <= tree.dims.n; ++i) subs.push_back(leaf_subprogram(P, tree, i));

    IntVec x(3, -2);
    while (true) {
        bool whole = is_zero(mat_vec(P.A.entries, x));
        bool per_leaf = true;
        for (int i = 1; i <= tree.dims.n; ++i)
            if (!is_zero(mat_vec(subs[static_cast<std::size_t>(i - 1)].A, project(tree, i, x))))
                per_leaf = false;
        CHECK(whole == per_leaf);
        std::size_t k = 3;
        bool moved = false;
        while (k > 0) {
            --k;
            if (x[k] < 2) {
                ++x[k];
                for (std::size_t j = k + 1; j < 3; ++j) x[j] = -2;
                moved = true;
                break;
            }
        }
        if (!moved) break;
    }
}

TEST_CASE("shared prefixes agree up to the lowest common ancestor") {
    GenParams gp;
    gp.t = 2;
    gp.s = {1, 1, 1};
    gp.branching = 2;
    gp.delta = 1;
    gp.seed = 99;
    Program P = generate(gp);
    MultistageTree tree = build_tree(P.A);
    CHECK(tree.dims.n == 4);

    IntVec b;
    for (std::size_t j = 0; j < P.A.entries.cols; ++j) b.push_back(Int(100 + (long long)j));
    auto parts = tree_partitions(tree);
    for (int i = 1; i <= 4; ++i) {
        for (int i2 = i + 1; i2 <= 4; ++i2) {
            // depth of the lowest common ancestor = deepest level whose
            // partition keeps i and i2 in one cell
            int lca = 0;
            for (int depth = 0; depth <= 2; ++depth)
                for (const auto& cell : parts[static_cast<std::size_t>(depth)]) {
                    bool has1 = std::find(cell.begin(), cell.end(), i) != cell.end();
                    bool has2 = std::find(cell.begin(), cell.end(), i2) != cell.end();
                    if (has1 && has2) lca = depth;
                }
            auto p1 = project(tree, i, b);
            auto p2 = project(tree, i2, b);
            int shared = 0;
            for (int depth = 0; depth <= lca; ++depth) shared += tree.dims.s[static_cast<std::size_t>(depth)];
            for (int k = 0; k < shared; ++k) CHECK(p1[static_cast<std::size_t>(k)] == p2[static_cast<std::size_t>(k)]);
            CHECK(p1[static_cast<std::size_t>(shared)] != p2[static_cast<std::size_t>(shared)]);
        }
    }
}

TEST_CASE("tree partitions refine") {
    Program P = fixtures::two_stage_pair();
    auto parts = tree_partitions(build_tree(P.A));
    REQUIRE(parts.size() == 2);
    CHECK(parts[0] == std::vector<std::vector<int>>{{1, 2}});
    CHECK(parts[1] == std::vector<std::vector<int>>{{1}, {2}});

    GenParams gp;
    gp.t = 2;
    gp.s = {1, 1, 1};
    gp.branching = 2;
    gp.seed = 3;
    auto parts2 = tree_partitions(build_tree(generate(gp).A));
    REQUIRE(parts2.size() == 3);
    CHECK(parts2[0] == std::vector<std::vector<int>>{{1, 2, 3, 4}});
    CHECK(parts2[1] == std::vector<std::vector<int>>{{1, 2}, {3, 4}});
    CHECK(parts2[2] == std::vector<std::vector<int>>{{1}, {2}, {3}, {4}});

    // every cell of P_i sits inside exactly one cell of P_{i-1}
    for (std::size_t i = 1; i < parts2.size(); ++i)
        for (const auto& cell : parts2[i]) {
            int containers = 0;
            for (const auto& coarse : parts2[i - 1])
                if (std::includes(coarse.begin(), coarse.end(), cell.begin(), cell.end()))
                    ++containers;
            CHECK(containers == 1);
        }
}

TEST_CASE("block layout round trip through serialization") {
    GenParams gp;
    gp.t = 1;
    gp.s = {2, 1};
    gp.branching = 3;
    gp.seed = 17;
    Program P = generate(gp);
    Program Q = parse_program(serialize_program(P));
    CHECK(P.A.entries == Q.A.entries);
    REQUIRE(P.A.blocks.size() == Q.A.blocks.size());
    for (std::size_t k = 0; k < P.A.blocks.size(); ++k) {
        CHECK(P.A.blocks[k].rows == Q.A.blocks[k].rows);
        CHECK(P.A.blocks[k].cols == Q.A.blocks[k].cols);
    }
    CHECK(P.b == Q.b);
    CHECK(P.c == Q.c);
}
