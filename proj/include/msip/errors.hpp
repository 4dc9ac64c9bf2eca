#pragma once

#include <stdexcept>
#include <string>

namespace msip {

/// Malformed caller input: dimension mismatches, violated preconditions,
/// unparsable files. Maps to CLI exit code 1.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An enumeration or certified search bound exceeds the configured budget.
/// Deliberately distinct from infeasibility; maps to CLI exit code 3.
class BudgetError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Why a block layout is not a multistage stochastic matrix.
enum class StructureCode {
    NonzeroOutsideBlock,
    ColumnOverlap,
    ColumnUncovered,
    NonLaminarRows,
    NoRoot,
    UnsupportedShape,
};

const char* to_string(StructureCode code);

class StructureError : public std::runtime_error {
public:
    StructureError(StructureCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    StructureCode code() const { return code_; }

private:
    StructureCode code_;
};

}  // namespace msip
