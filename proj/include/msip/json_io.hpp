#pragma once

#include <string>

#include "msip/multiset.hpp"
#include "msip/multistage.hpp"

namespace msip {

/// Parses the canonical instance format (1-based indices):
/// { "m": int, "N": int, "entries": [[int]],
///   "blocks": [{"rows":[int],"cols":[int]}],
///   "b": [int], "c": [int], "lower": [int|null], "upper": [int|null] }
/// Non-integer numbers are rejected; structural violations surface with
/// the validate_structure error codes.
Program parse_program(const std::string& text);

/// Canonical serialization: sorted keys, sorted index lists, 1-based
/// indices, two-space indentation, trailing newline. parse(serialize(P))
/// reproduces P exactly and serialization is idempotent.
std::string serialize_program(const Program& P);

/// Multiset family fixture:
/// { "d": int, "delta": int, "tree": <instance object, b/c optional>,
///   "sets": [[{"v":[int], "mult":"num/den"}]] }
struct MultisetFile {
    int d = 0;
    Int delta;
    MultistageMatrix matrix;
    std::vector<Multiset> sets;
};

MultisetFile parse_multiset_file(const std::string& text);

}  // namespace msip
