#include "msip/multistage.hpp"

#include <algorithm>
#include <set>

namespace msip {

namespace {

bool is_subset(const std::vector<int>& a, const std::vector<int>& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

bool disjoint(const std::vector<int>& a, const std::vector<int>& b) {
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] == b[j]) return false;
        if (a[i] < b[j]) ++i; else ++j;
    }
    return true;
}

}  // namespace

MultistageMatrix validate_structure(IntMatrix entries, std::vector<Block> blocks) {
    const int m = static_cast<int>(entries.rows);
    const int N = static_cast<int>(entries.cols);

    for (auto& blk : blocks) {
        std::sort(blk.rows.begin(), blk.rows.end());
        std::sort(blk.cols.begin(), blk.cols.end());
        if (blk.cols.empty()) throw InputError("validate_structure: block with empty column set");
        if (blk.rows.empty()) throw InputError("validate_structure: block with empty row set");
        for (int r : blk.rows)
            if (r < 0 || r >= m) throw InputError("validate_structure: row index out of range");
        for (int c : blk.cols)
            if (c < 0 || c >= N) throw InputError("validate_structure: column index out of range");
        if (std::adjacent_find(blk.rows.begin(), blk.rows.end()) != blk.rows.end() ||
            std::adjacent_find(blk.cols.begin(), blk.cols.end()) != blk.cols.end())
            throw InputError("validate_structure: duplicate index inside a block");
    }

    // Column sets must partition {0..N-1}.
    std::vector<int> owner(N, -1);
    for (std::size_t k = 0; k < blocks.size(); ++k) {
        for (int c : blocks[k].cols) {
            if (owner[c] != -1)
                throw StructureError(StructureCode::ColumnOverlap,
                                     "column " + std::to_string(c + 1) + " lies in two blocks");
            owner[c] = static_cast<int>(k);
        }
    }
    for (int c = 0; c < N; ++c)
        if (owner[c] == -1)
            throw StructureError(StructureCode::ColumnUncovered,
                                 "column " + std::to_string(c + 1) + " not covered by any block");

    // Row sets pairwise nested or disjoint; equal row sets would make the
    // parent relation ambiguous and are rejected too.
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        for (std::size_t j = i + 1; j < blocks.size(); ++j) {
            const auto& ri = blocks[i].rows;
            const auto& rj = blocks[j].rows;
            if (ri == rj)
                throw StructureError(StructureCode::NonLaminarRows,
                                     "two blocks share the identical row set");
            if (!is_subset(ri, rj) && !is_subset(rj, ri) && !disjoint(ri, rj))
                throw StructureError(StructureCode::NonLaminarRows,
                                     "block row sets overlap without nesting");
        }
    }

    // A root block whose row set contains every other block's rows.
    bool have_root = false;
    for (const auto& cand : blocks) {
        bool ok = true;
        for (const auto& other : blocks)
            if (!is_subset(other.rows, cand.rows)) { ok = false; break; }
        if (ok) { have_root = true; break; }
    }
    if (!have_root && !blocks.empty())
        throw StructureError(StructureCode::NoRoot, "no block's row set contains all others");
    if (blocks.empty()) throw InputError("validate_structure: no blocks given");

    // Every nonzero entry must lie inside its column's block rectangle.
    for (int i = 0; i < m; ++i) {
        for (int c = 0; c < N; ++c) {
            if (entries.at(i, c) == 0) continue;
            const auto& rows = blocks[owner[c]].rows;
            if (!std::binary_search(rows.begin(), rows.end(), i))
                throw StructureError(
                    StructureCode::NonzeroOutsideBlock,
                    "nonzero entry at row " + std::to_string(i + 1) + ", column " +
                        std::to_string(c + 1) + " lies outside its block");
        }
    }

    MultistageMatrix M;
    M.delta = max_abs(entries);
    M.entries = std::move(entries);
    M.blocks = std::move(blocks);
    return M;
}

MultistageTree build_tree(const MultistageMatrix& M) {
    const int nb = static_cast<int>(M.blocks.size());
    MultistageTree tree;
    tree.nodes.resize(nb);

    for (int k = 0; k < nb; ++k) {
        tree.nodes[k].block = k;
        tree.nodes[k].cols = M.blocks[k].cols;
        tree.nodes[k].rows = M.blocks[k].rows;
    }

    // Parent = the strict row-superset of least cardinality. Laminarity
    // makes the supersets of a block a chain, so the choice is unique.
    for (int k = 0; k < nb; ++k) {
        int parent = -1;
        for (int j = 0; j < nb; ++j) {
            if (j == k) continue;
            if (!is_subset(tree.nodes[k].rows, tree.nodes[j].rows)) continue;
            if (parent == -1 || tree.nodes[j].rows.size() < tree.nodes[parent].rows.size())
                parent = j;
        }
        tree.nodes[k].parent = parent;
        if (parent == -1) tree.root = k;
    }

    for (int k = 0; k < nb; ++k)
        if (tree.nodes[k].parent != -1) tree.nodes[tree.nodes[k].parent].children.push_back(k);
    for (auto& node : tree.nodes) {
        std::sort(node.children.begin(), node.children.end(), [&](int a, int b) {
            return tree.nodes[a].cols.front() < tree.nodes[b].cols.front();
        });
    }

    // Depths via DFS; leaves numbered in DFS order.
    std::vector<int> order;
    std::vector<int> stack = {tree.root};
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        order.push_back(v);
        const auto& ch = tree.nodes[v].children;
        for (auto it = ch.rbegin(); it != ch.rend(); ++it) {
            tree.nodes[*it].depth = tree.nodes[v].depth + 1;
            stack.push_back(*it);
        }
    }
    if (order.size() != static_cast<std::size_t>(nb))
        throw StructureError(StructureCode::NoRoot, "blocks do not form a single tree");

    int t = 0;
    for (const auto& node : tree.nodes) t = std::max(t, node.depth);

    for (int v : order) {
        if (tree.nodes[v].children.empty()) {
            if (tree.nodes[v].depth != t)
                throw StructureError(StructureCode::UnsupportedShape,
                                     "leaves at different depths");
            tree.nodes[v].leaf_number = static_cast<int>(tree.leaves.size()) + 1;
            tree.leaves.push_back(v);
        }
    }

    StageDims dims;
    dims.t = t;
    dims.n = static_cast<int>(tree.leaves.size());
    dims.s.assign(t + 1, -1);
    for (const auto& node : tree.nodes) {
        int& s = dims.s[node.depth];
        int width = static_cast<int>(node.cols.size());
        if (s == -1) s = width;
        else if (s != width)
            throw StructureError(StructureCode::UnsupportedShape,
                                 "blocks at equal depth with different column counts");
    }
    dims.d.assign(t + 1, 0);
    for (int j = 0; j <= t; ++j)
        for (int i = 0; i <= t - j; ++i) dims.d[j] += dims.s[i];
    for (int leaf : tree.leaves)
        dims.r = std::max(dims.r, static_cast<int>(tree.nodes[leaf].rows.size()));
    tree.dims = std::move(dims);

    tree.path_cols.resize(tree.leaves.size());
    for (std::size_t i = 0; i < tree.leaves.size(); ++i) {
        std::vector<int> chain;
        for (int v = tree.leaves[i]; v != -1; v = tree.nodes[v].parent) chain.push_back(v);
        std::reverse(chain.begin(), chain.end());
        for (int v : chain)
            tree.path_cols[i].insert(tree.path_cols[i].end(), tree.nodes[v].cols.begin(),
                                     tree.nodes[v].cols.end());
    }
    return tree;
}

const std::vector<int>& path_columns(const MultistageTree& tree, int leaf) {
    if (leaf < 1 || leaf > tree.dims.n) throw InputError("leaf index out of range");
    return tree.path_cols[static_cast<std::size_t>(leaf - 1)];
}

Subprogram leaf_subprogram(const Program& P, const MultistageTree& tree, int leaf) {
    const auto& cols = path_columns(tree, leaf);
    const auto& rows = tree.nodes[tree.leaves[static_cast<std::size_t>(leaf - 1)]].rows;

    Subprogram sub;
    sub.colIdx = cols;
    sub.rowIdx = rows;
    sub.A = IntMatrix(rows.size(), cols.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols.size(); ++j)
            sub.A.at(i, j) = P.A.entries.at(static_cast<std::size_t>(rows[i]),
                                            static_cast<std::size_t>(cols[j]));
    for (int r : rows) sub.b.push_back(P.b[static_cast<std::size_t>(r)]);
    for (int c : cols) sub.c.push_back(P.c[static_cast<std::size_t>(c)]);
    return sub;
}

std::vector<std::vector<std::vector<int>>> tree_partitions(const MultistageTree& tree) {
    std::vector<std::vector<std::vector<int>>> parts(tree.dims.t + 1);

    // Leaves below each node, as sorted leaf numbers.
    std::vector<std::vector<int>> below(tree.nodes.size());
    // Reverse DFS order: children are later than parents in a pre-order
    // stack traversal, so iterate node indices by decreasing depth.
    std::vector<int> idx(tree.nodes.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = static_cast<int>(i);
    std::sort(idx.begin(), idx.end(), [&](int a, int b) {
        return tree.nodes[a].depth > tree.nodes[b].depth;
    });
    for (int v : idx) {
        if (tree.nodes[v].children.empty()) {
            below[v] = {tree.nodes[v].leaf_number};
        } else {
            for (int ch : tree.nodes[v].children)
                below[v].insert(below[v].end(), below[ch].begin(), below[ch].end());
            std::sort(below[v].begin(), below[v].end());
        }
    }

    for (std::size_t v = 0; v < tree.nodes.size(); ++v)
        parts[static_cast<std::size_t>(tree.nodes[v].depth)].push_back(below[v]);
    for (auto& level : parts)
        std::sort(level.begin(), level.end(),
                  [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return parts;
}

}  // namespace msip
