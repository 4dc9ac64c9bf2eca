#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "msip/rational.hpp"

namespace msip {

/// Dense row-major matrix of exact rationals.
struct RatMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<Rational> a;

    RatMatrix() = default;
    RatMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c) {}

    Rational& at(std::size_t r, std::size_t c) { return a[r * cols + c]; }
    const Rational& at(std::size_t r, std::size_t c) const { return a[r * cols + c]; }

    static RatMatrix identity(std::size_t n);
};

/// Dense row-major matrix of arbitrary-precision integers.
struct IntMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<Int> a;

    IntMatrix() = default;
    IntMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c) {}

    Int& at(std::size_t r, std::size_t c) { return a[r * cols + c]; }
    const Int& at(std::size_t r, std::size_t c) const { return a[r * cols + c]; }

    static IntMatrix identity(std::size_t n);

    bool operator==(const IntMatrix& o) const = default;
};

RatMatrix to_rational(const IntMatrix& m);

/// Largest absolute entry (the Delta of a constraint matrix); 0 for empty.
Int max_abs(const IntMatrix& m);

IntVec mat_vec(const IntMatrix& m, const IntVec& x);
RatVec mat_vec(const RatMatrix& m, const RatVec& x);
RatVec mat_vec(const IntMatrix& m, const RatVec& x);

bool is_zero(const IntVec& v);
Int inf_norm(const IntVec& v);
Int one_norm(const IntVec& v);
Rational inf_norm(const RatVec& v);

IntVec add(const IntVec& a, const IntVec& b);
IntVec sub(const IntVec& a, const IntVec& b);
IntVec negate(const IntVec& v);
IntVec scale(const Int& k, const IntVec& v);

Rational dot(const RatVec& a, const RatVec& b);
Int dot(const IntVec& a, const IntVec& b);

/// Exact solution of the square system B x = b, or nullopt when B is
/// singular. For an integral B the reduced denominators of x divide
/// |det B| (Cramer).
std::optional<RatVec> solve_square(const RatMatrix& B, const RatVec& b);

Rational determinant(const RatMatrix& B);
Int determinant(const IntMatrix& B);

/// Basis of the full integer kernel lattice ker_Z(A) = {x in Z^n : Ax = 0},
/// obtained by unimodular column reduction. Empty for a full-column-rank A.
std::vector<IntVec> kernel_lattice_basis(const IntMatrix& A);

}  // namespace msip
