#pragma once

#include <cstdint>

#include "msip/multistage.hpp"

namespace msip {

/// SplitMix64 (Steele, Lea, Flood; the java.util.SplitRandom constants).
/// Fixed here by its constants so generated corpora are reproducible
/// across languages and library versions.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    /// Uniform draw from [lo, hi] by rejection sampling (no modulo bias).
    long long uniform(long long lo, long long hi);

private:
    std::uint64_t state_;
};

/// Shape and value ranges of a generated instance. The tree is a complete
/// branching-regular tree of height t with s[i] columns per depth-i block
/// and r rows per leaf block.
struct GenParams {
    int t = 1;
    std::vector<int> s;  // size t+1
    int branching = 2;
    int r = 1;
    int delta = 1;
    long long bLo = -3, bHi = 3;
    long long cLo = -3, cHi = 3;
    std::uint64_t seed = 0;
};

/// Deterministic instance generation: identical (params, seed) give the
/// bit-identical Program. Draw order: block entries in node DFS-preorder
/// (row-major inside a block), then b by row, then c by column.
Program generate(const GenParams& p);

}  // namespace msip
