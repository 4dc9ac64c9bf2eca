#include "msip/json_io.hpp"

#include <json.hpp>

namespace msip {

namespace {

using nlohmann::json;

json parse_text(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw InputError("invalid JSON");
    return j;
}

Int get_int(const json& j, const std::string& where) {
    if (!j.is_number_integer())
        throw InputError(where + ": expected an integer, got " + j.dump());
    return Int(j.get<long long>());
}

int get_index(const json& j, const std::string& where) {
    if (!j.is_number_integer())
        throw InputError(where + ": expected an integer index, got " + j.dump());
    return j.get<int>();
}

const json& require(const json& j, const std::string& key) {
    auto it = j.find(key);
    if (it == j.end()) throw InputError("missing field '" + key + "'");
    return *it;
}

std::pair<IntMatrix, std::vector<Block>> parse_matrix_parts(const json& j) {
    int m = get_index(require(j, "m"), "m");
    int N = get_index(require(j, "N"), "N");
    if (m < 0 || N < 1) throw InputError("m must be >= 0 and N >= 1");

    const json& ent = require(j, "entries");
    if (!ent.is_array() || static_cast<int>(ent.size()) != m)
        throw InputError("entries: expected " + std::to_string(m) + " rows");
    IntMatrix entries(static_cast<std::size_t>(m), static_cast<std::size_t>(N));
    for (int i = 0; i < m; ++i) {
        const json& row = ent[static_cast<std::size_t>(i)];
        if (!row.is_array() || static_cast<int>(row.size()) != N)
            throw InputError("entries: row " + std::to_string(i + 1) + " has wrong length");
        for (int c = 0; c < N; ++c)
            entries.at(static_cast<std::size_t>(i), static_cast<std::size_t>(c)) =
                get_int(row[static_cast<std::size_t>(c)], "entries");
    }

    const json& blks = require(j, "blocks");
    if (!blks.is_array() || blks.empty()) throw InputError("blocks: expected a nonempty array");
    std::vector<Block> blocks;
    for (const json& bj : blks) {
        Block blk;
        for (const json& r : require(bj, "rows")) blk.rows.push_back(get_index(r, "rows") - 1);
        for (const json& c : require(bj, "cols")) blk.cols.push_back(get_index(c, "cols") - 1);
        blocks.push_back(std::move(blk));
    }
    return {std::move(entries), std::move(blocks)};
}

IntVec parse_int_vec(const json& j, std::size_t want, const std::string& where) {
    if (!j.is_array() || j.size() != want)
        throw InputError(where + ": expected an array of length " + std::to_string(want));
    IntVec v;
    for (const json& x : j) v.push_back(get_int(x, where));
    return v;
}

}  // namespace

Program parse_program(const std::string& text) {
    json j = parse_text(text);
    auto [entries, blocks] = parse_matrix_parts(j);
    std::size_t m = entries.rows, N = entries.cols;

    Program P;
    P.A = validate_structure(std::move(entries), std::move(blocks));
    P.b = parse_int_vec(require(j, "b"), m, "b");
    P.c = parse_int_vec(require(j, "c"), N, "c");

    auto parse_bounds = [&](const char* key) {
        std::vector<std::optional<Int>> out(N);
        auto it = j.find(key);
        if (it == j.end() || it->is_null()) return out;
        if (!it->is_array() || it->size() != N)
            throw InputError(std::string(key) + ": expected an array of length " +
                             std::to_string(N));
        for (std::size_t k = 0; k < N; ++k)
            if (!(*it)[k].is_null()) out[k] = get_int((*it)[k], key);
        return out;
    };
    P.lower = parse_bounds("lower");
    P.upper = parse_bounds("upper");
    return P;
}

std::string serialize_program(const Program& P) {
    json j;
    j["m"] = P.A.entries.rows;
    j["N"] = P.A.entries.cols;
    json ent = json::array();
    for (std::size_t i = 0; i < P.A.entries.rows; ++i) {
        json row = json::array();
        for (std::size_t c = 0; c < P.A.entries.cols; ++c)
            row.push_back(P.A.entries.at(i, c).convert_to<long long>());
        ent.push_back(std::move(row));
    }
    j["entries"] = std::move(ent);
    json blocks = json::array();
    for (const Block& blk : P.A.blocks) {
        json bj;
        json rows = json::array(), cols = json::array();
        for (int r : blk.rows) rows.push_back(r + 1);
        for (int c : blk.cols) cols.push_back(c + 1);
        bj["rows"] = std::move(rows);
        bj["cols"] = std::move(cols);
        blocks.push_back(std::move(bj));
    }
    j["blocks"] = std::move(blocks);
    json b = json::array(), c = json::array();
    for (const Int& x : P.b) b.push_back(x.convert_to<long long>());
    for (const Int& x : P.c) c.push_back(x.convert_to<long long>());
    j["b"] = std::move(b);
    j["c"] = std::move(c);
    json lower = json::array(), upper = json::array();
    for (const auto& x : P.lower)
        lower.push_back(x ? json(x->convert_to<long long>()) : json(nullptr));
    for (const auto& x : P.upper)
        upper.push_back(x ? json(x->convert_to<long long>()) : json(nullptr));
    j["lower"] = std::move(lower);
    j["upper"] = std::move(upper);
    return j.dump(2) + "\n";
}

MultisetFile parse_multiset_file(const std::string& text) {
    json j = parse_text(text);
    MultisetFile f;
    f.d = get_index(require(j, "d"), "d");
    f.delta = get_int(require(j, "delta"), "delta");
    if (f.d < 1 || f.delta < 0) throw InputError("multiset file: bad d or delta");

    auto [entries, blocks] = parse_matrix_parts(require(j, "tree"));
    f.matrix = validate_structure(std::move(entries), std::move(blocks));

    const json& sets = require(j, "sets");
    if (!sets.is_array()) throw InputError("sets: expected an array");
    for (const json& sj : sets) {
        Multiset mset;
        if (!sj.is_array()) throw InputError("sets: each set must be an array");
        for (const json& ej : sj) {
            IntVec v;
            for (const json& x : require(ej, "v")) v.push_back(get_int(x, "v"));
            if (static_cast<int>(v.size()) != f.d)
                throw InputError("sets: element dimension differs from d");
            const json& mj = require(ej, "mult");
            Rational q = mj.is_string() ? Rational::parse(mj.get<std::string>())
                                        : Rational(get_int(mj, "mult"));
            if (q.sign() < 0) throw InputError("sets: negative multiplicity");
            mset.add(v, q);
        }
        f.sets.push_back(std::move(mset));
    }
    return f;
}

}  // namespace msip
