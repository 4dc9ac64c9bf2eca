#pragma once

#include <optional>
#include <string>
#include <vector>

#include "msip/linalg.hpp"

namespace msip {

/// One block of a multistage stochastic matrix: a set of rows times a set
/// of columns that may carry nonzero entries. Index sets are 0-based and
/// kept sorted.
struct Block {
    std::vector<int> rows;
    std::vector<int> cols;
};

/// Integer constraint matrix with a validated laminar block layout.
/// Invariants (enforced by validate_structure): block column sets
/// partition the columns, every nonzero entry lies in some block's
/// rectangle, block row sets are pairwise nested or disjoint, and one
/// block's row set contains all others.
struct MultistageMatrix {
    IntMatrix entries;
    std::vector<Block> blocks;
    Int delta;  // max-abs entry
};

/// Per-depth column counts and their partial sums.
/// s[i] = columns of every block at depth i (root depth 0);
/// d[j] = s_0 + ... + s_{t-j}, so d[0] is the leaf subprogram dimension
/// and d[t] = s_0. r is the leaf-block row count (reporting only; the
/// maximum is recorded when leaves disagree).
struct StageDims {
    std::vector<int> s;
    std::vector<int> d;
    int t = 0;
    int n = 0;
    int r = 0;
};

struct TreeNode {
    int block = -1;  // index into MultistageMatrix::blocks
    int parent = -1;
    int depth = 0;
    std::vector<int> children;    // ordered by smallest column index
    std::vector<int> cols;        // sorted, same as the block's
    std::vector<int> rows;        // sorted, same as the block's
    int leaf_number = 0;          // 1..n for leaves, 0 otherwise
};

/// Tree over the blocks' column sets, edges by row-set containment.
/// Leaves are numbered 1..n in DFS order with children ordered by
/// smallest column index.
struct MultistageTree {
    std::vector<TreeNode> nodes;
    int root = -1;
    std::vector<int> leaves;                  // node index of leaf number i+1
    std::vector<std::vector<int>> path_cols;  // per leaf, root segment first
    StageDims dims;
};

/// A full instance: matrix, right-hand side, objective, optional bounds.
/// A missing lower bound means 0 and a missing upper bound means +infinity
/// (the plain nonnegative form).
struct Program {
    MultistageMatrix A;
    IntVec b;
    IntVec c;
    std::vector<std::optional<Int>> lower;
    std::vector<std::optional<Int>> upper;
};

/// Checks the three structural conditions and returns the validated
/// matrix. Throws StructureError with a distinct code per violation.
MultistageMatrix validate_structure(IntMatrix entries, std::vector<Block> blocks);

/// Builds the containment tree, checks the uniform-shape assumptions
/// (equal |cols| per depth, equal leaf depth) and numbers the leaves.
/// Throws StructureError(UnsupportedShape) on ragged trees.
MultistageTree build_tree(const MultistageMatrix& M);

/// Rows of leaf i's block and the columns of the root-to-leaf path.
struct Subprogram {
    IntMatrix A;              // r x d
    IntVec b;
    IntVec c;
    std::vector<int> colIdx;  // path columns, root segment first
    std::vector<int> rowIdx;
};

Subprogram leaf_subprogram(const Program& P, const MultistageTree& tree, int leaf);

/// Column indices along the root-to-leaf path, root segment first and each
/// node's columns in ascending order; length d.
const std::vector<int>& path_columns(const MultistageTree& tree, int leaf);

/// pi(i, full): projection of a whole-column vector to leaf i's path.
template <typename T>
std::vector<T> project(const MultistageTree& tree, int leaf, const std::vector<T>& full) {
    const auto& cols = path_columns(tree, leaf);
    std::vector<T> out;
    out.reserve(cols.size());
    for (int c : cols) {
        if (c < 0 || static_cast<std::size_t>(c) >= full.size())
            throw InputError("project: vector does not cover all columns");
        out.push_back(full[c]);
    }
    return out;
}

/// pi^j(i, full): the first d_j entries of pi(i, full).
template <typename T>
std::vector<T> project_prefix(const MultistageTree& tree, int leaf, const std::vector<T>& full,
                              int j) {
    if (j < 0 || j > tree.dims.t) throw InputError("project_prefix: stage out of range");
    std::vector<T> v = project(tree, leaf, full);
    v.resize(static_cast<std::size_t>(tree.dims.d[j]));
    return v;
}

/// Truncates a d_j-dimensional path vector to its first d_{j+1} entries.
template <typename T>
std::vector<T> drop_last_stage(const MultistageTree& tree, const std::vector<T>& v, int j) {
    if (j < 0 || j + 1 > tree.dims.t) throw InputError("drop_last_stage: stage out of range");
    if (v.size() != static_cast<std::size_t>(tree.dims.d[j]))
        throw InputError("drop_last_stage: dimension mismatch");
    std::vector<T> out = v;
    out.resize(static_cast<std::size_t>(tree.dims.d[j + 1]));
    return out;
}

/// P_0..P_t with P_i = {leaves below v : depth(v) = i}; every P_i
/// partitions {1..n} and refines P_{i-1}. Cells are sorted leaf numbers,
/// cells ordered by first element.
std::vector<std::vector<std::vector<int>>> tree_partitions(const MultistageTree& tree);

}  // namespace msip
