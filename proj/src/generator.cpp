#include "msip/generator.hpp"

#include <cassert>

namespace msip {

long long SplitMix64::uniform(long long lo, long long hi) {
    if (lo > hi) throw InputError("uniform: empty range");
    std::uint64_t range = static_cast<std::uint64_t>(hi - lo) + 1;
    if (range == 0) return static_cast<long long>(next());  // full 64-bit range
    std::uint64_t limit = UINT64_MAX - UINT64_MAX % range;
    std::uint64_t v;
    do {
        v = next();
    } while (v >= limit);
    return lo + static_cast<long long>(v % range);
}

Program generate(const GenParams& p) {
    if (p.t < 0) throw InputError("generate: t must be >= 0");
    if (p.s.size() != static_cast<std::size_t>(p.t) + 1)
        throw InputError("generate: need one column width per stage (t+1 values)");
    for (int w : p.s)
        if (w < 1) throw InputError("generate: column widths must be >= 1");
    if (p.branching < 1) throw InputError("generate: branching must be >= 1");
    if (p.r < 1) throw InputError("generate: r must be >= 1");
    if (p.delta < 1) throw InputError("generate: delta must be >= 1");
    if (p.bLo > p.bHi || p.cLo > p.cHi) throw InputError("generate: empty value range");

    // Build the complete tree in DFS preorder, assigning column ranges at
    // creation; leaves then own consecutive row ranges of r rows each.
    struct Node {
        int depth;
        int colStart, colCount;
        int rowStart = 0, rowCount = 0;  // filled for leaves then lifted up
        int parent;
    };
    std::vector<Node> nodes;
    int next_col = 0;
    int next_leaf = 0;

    auto build = [&](auto&& self, int depth, int parent) -> int {
        int id = static_cast<int>(nodes.size());
        nodes.push_back({depth, next_col, p.s[static_cast<std::size_t>(depth)], 0, 0, parent});
        next_col += p.s[static_cast<std::size_t>(depth)];
        if (depth == p.t) {
            nodes[static_cast<std::size_t>(id)].rowStart = next_leaf * p.r;
            nodes[static_cast<std::size_t>(id)].rowCount = p.r;
            ++next_leaf;
        } else {
            for (int child = 0; child < p.branching; ++child) self(self, depth + 1, id);
        }
        return id;
    };
    build(build, 0, -1);

    // Lift leaf row ranges to ancestors (children are contiguous in DFS
    // preorder, so each internal node covers a contiguous row range).
    for (std::size_t id = nodes.size(); id-- > 0;) {
        if (nodes[id].depth == p.t) continue;
        int lo = -1, hi = -1;
        for (std::size_t ch = 0; ch < nodes.size(); ++ch) {
            if (nodes[ch].parent != static_cast<int>(id)) continue;
            if (lo == -1 || nodes[ch].rowStart < lo) lo = nodes[ch].rowStart;
            int end = nodes[ch].rowStart + nodes[ch].rowCount;
            if (end > hi) hi = end;
        }
        nodes[id].rowStart = lo;
        nodes[id].rowCount = hi - lo;
    }

    const int n_leaves = next_leaf;
    const int m = n_leaves * p.r;
    const int N = next_col;

    SplitMix64 rng(p.seed);
    IntMatrix entries(static_cast<std::size_t>(m), static_cast<std::size_t>(N));
    std::vector<Block> blocks;
    for (const Node& node : nodes) {
        Block blk;
        for (int i = 0; i < node.rowCount; ++i) blk.rows.push_back(node.rowStart + i);
        for (int j = 0; j < node.colCount; ++j) blk.cols.push_back(node.colStart + j);
        for (int i = 0; i < node.rowCount; ++i)
            for (int j = 0; j < node.colCount; ++j)
                entries.at(static_cast<std::size_t>(node.rowStart + i),
                           static_cast<std::size_t>(node.colStart + j)) =
                    rng.uniform(-p.delta, p.delta);
        blocks.push_back(std::move(blk));
    }

    Program prog;
    prog.A = validate_structure(std::move(entries), std::move(blocks));
    for (int i = 0; i < m; ++i) prog.b.push_back(Int(rng.uniform(p.bLo, p.bHi)));
    for (int j = 0; j < N; ++j) prog.c.push_back(Int(rng.uniform(p.cLo, p.cHi)));
    prog.lower.assign(static_cast<std::size_t>(N), std::nullopt);
    prog.upper.assign(static_cast<std::size_t>(N), std::nullopt);
    return prog;
}

}  // namespace msip
