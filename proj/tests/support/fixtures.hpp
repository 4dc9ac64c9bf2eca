#pragma once

#include "msip/multistage.hpp"

namespace fixtures {

/// The smallest two-stage shape:
///   [ 1 1 0 ]   root block: rows {1,2} x col {1}
///   [ 1 0 1 ]   leaf blocks: row {1} x col {2}, row {2} x col {3}
inline msip::Program two_stage_pair(msip::IntVec b = {msip::Int(2), msip::Int(2)},
                                    msip::IntVec c = {msip::Int(1), msip::Int(0), msip::Int(0)}) {
    using namespace msip;
    IntMatrix entries(2, 3);
    entries.at(0, 0) = 1; entries.at(0, 1) = 1; entries.at(0, 2) = 0;
    entries.at(1, 0) = 1; entries.at(1, 1) = 0; entries.at(1, 2) = 1;
    std::vector<Block> blocks = {
        {{0, 1}, {0}},
        {{0}, {1}},
        {{1}, {2}},
    };
    Program P;
    P.A = validate_structure(std::move(entries), std::move(blocks));
    P.b = std::move(b);
    P.c = std::move(c);
    P.lower.assign(3, std::nullopt);
    P.upper.assign(3, std::nullopt);
    return P;
}

/// A single block covering everything (t = 0).
inline msip::Program single_block(msip::IntMatrix entries, msip::IntVec b, msip::IntVec c) {
    using namespace msip;
    std::vector<int> rows, cols;
    for (std::size_t i = 0; i < entries.rows; ++i) rows.push_back(static_cast<int>(i));
    for (std::size_t j = 0; j < entries.cols; ++j) cols.push_back(static_cast<int>(j));
    Program P;
    std::size_t n = entries.cols;
    P.A = validate_structure(std::move(entries), {{rows, cols}});
    P.b = std::move(b);
    P.c = std::move(c);
    P.lower.assign(n, std::nullopt);
    P.upper.assign(n, std::nullopt);
    return P;
}

inline msip::IntMatrix make_matrix(std::size_t rows, std::size_t cols,
                                   std::initializer_list<long long> vals) {
    msip::IntMatrix m(rows, cols);
    std::size_t k = 0;
    for (long long v : vals) m.a[k++] = v;
    return m;
}

inline msip::IntVec iv(std::initializer_list<long long> vals) {
    msip::IntVec v;
    for (long long x : vals) v.emplace_back(x);
    return v;
}

inline msip::RatVec rv(std::initializer_list<long long> vals) {
    msip::RatVec v;
    for (long long x : vals) v.emplace_back(x);
    return v;
}

}  // namespace fixtures
