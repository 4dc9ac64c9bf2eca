#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "msip/generator.hpp"
#include "msip/simplex.hpp"
#include "support/fixtures.hpp"
#include "support/lp_oracle.hpp"

using namespace msip;
using fixtures::iv;
using fixtures::make_matrix;
using fixtures::rv;

namespace {

RatMatrix rmat(std::size_t rows, std::size_t cols, std::initializer_list<long long> vals) {
    return to_rational(fixtures::make_matrix(rows, cols, vals));
}

}  // namespace

TEST_CASE("single bounded variable") {
    auto res = simplex_solve(rmat(1, 1, {1}), rv({3}), rv({-1}), Sense::Min);
    REQUIRE(res.status == LpStatus::Optimal);
    CHECK(res.vertex == rv({3}));
    CHECK(res.value == Rational(-3));
}

TEST_CASE("infeasible: nonnegative variables cannot sum to -1") {
    auto res = simplex_solve(rmat(1, 2, {1, 1}), rv({-1}), rv({0, 0}), Sense::Min);
    CHECK(res.status == LpStatus::Infeasible);
}

TEST_CASE("unbounded ray") {
    auto res = simplex_solve(rmat(1, 2, {1, -1}), rv({0}), rv({-1, 0}), Sense::Min);
    CHECK(res.status == LpStatus::Unbounded);
}

TEST_CASE("max sense") {
    auto res = simplex_solve(rmat(1, 2, {1, 1}), rv({4}), rv({1, 2}), Sense::Max);
    REQUIRE(res.status == LpStatus::Optimal);
    CHECK(res.value == Rational(8));
    CHECK(res.vertex == rv({0, 4}));
}

TEST_CASE("optimal vertices satisfy the constraints exactly") {
    SplitMix64 rng(23);
    int optimal_seen = 0;
    for (int iter = 0; iter < 400; ++iter) {
        std::size_t m = 1 + static_cast<std::size_t>(rng.uniform(0, 2));
        std::size_t n = 1 + static_cast<std::size_t>(rng.uniform(0, 5));
        RatMatrix A(m, n);
        for (auto& v : A.a) v = Rational(rng.uniform(-3, 3));
        RatVec b(m), c(n);
        for (auto& v : b) v = Rational(rng.uniform(-5, 5));
        for (auto& v : c) v = Rational(rng.uniform(-3, 3));

        LpResult res = simplex_solve(A, b, c, Sense::Min);
        if (res.status != LpStatus::Optimal) continue;
        ++optimal_seen;
        CHECK(mat_vec(A, res.vertex) == b);
        for (const auto& x : res.vertex) CHECK(x.sign() >= 0);
        CHECK(dot(c, res.vertex) == res.value);
    }
    CHECK(optimal_seen > 30);
}

TEST_CASE("value agrees with exhaustive basis enumeration") {
    SplitMix64 rng(31);
    int compared = 0;
    for (int iter = 0; iter < 500; ++iter) {
        std::size_t m = 1 + static_cast<std::size_t>(rng.uniform(0, 1));
        std::size_t n = 1 + static_cast<std::size_t>(rng.uniform(0, 5));
        RatMatrix A(m, n);
        for (auto& v : A.a) v = Rational(rng.uniform(-3, 3));
        RatVec b(m), c(n);
        for (auto& v : b) v = Rational(rng.uniform(-5, 5));
        for (auto& v : c) v = Rational(rng.uniform(-3, 3));

        LpResult res = simplex_solve(A, b, c, Sense::Min);
        if (res.status == LpStatus::Unbounded) continue;
        auto ref = oracle::lp_vertex_oracle(A, b, c, Sense::Min);
        if (res.status == LpStatus::Infeasible) {
            CHECK(!ref);
        } else {
            REQUIRE(ref);
            CHECK(res.value == *ref);
            ++compared;
        }
    }
    CHECK(compared > 50);
}

TEST_CASE("degenerate and redundant rows") {
    // duplicated constraint row
    auto res = simplex_solve(rmat(2, 2, {1, 1, 1, 1}), rv({2, 2}), rv({1, 0}), Sense::Min);
    REQUIRE(res.status == LpStatus::Optimal);
    CHECK(res.value == Rational(0));
    // inconsistent duplicate
    auto bad = simplex_solve(rmat(2, 2, {1, 1, 1, 1}), rv({2, 3}), rv({1, 0}), Sense::Min);
    CHECK(bad.status == LpStatus::Infeasible);
}

TEST_CASE("boxed solve shifts and maps back") {
    // min -x1 over 2x1 + x2 = 3, 0 <= x <= 3
    auto res = simplex_solve_boxed(rmat(1, 2, {2, 1}), rv({3}), rv({-1, 0}), Sense::Min,
                                   rv({0, 0}), rv({3, 3}));
    REQUIRE(res.status == LpStatus::Optimal);
    CHECK(res.vertex == RatVec{Rational(Int(3), Int(2)), Rational(0)});
    // negative lower bounds work too
    auto res2 = simplex_solve_boxed(rmat(1, 2, {1, 1}), rv({0}), rv({1, 0}), Sense::Min,
                                    rv({-2, -2}), rv({2, 2}));
    REQUIRE(res2.status == LpStatus::Optimal);
    CHECK(res2.value == Rational(-2));
    CHECK(res2.status == LpStatus::Optimal);
    auto res3 = simplex_solve_boxed(rmat(1, 1, {1}), rv({5}), rv({0}), Sense::Min, rv({0}),
                                    rv({3}));
    CHECK(res3.status == LpStatus::Infeasible);
}

TEST_CASE("cone membership with certificates") {
    std::vector<IntVec> C = {iv({1, 0}), iv({0, 1})};
    auto r1 = cone_member(C, rv({1, 1}));
    REQUIRE(r1.member);
    CHECK(r1.certificate == rv({1, 1}));
    CHECK(!cone_member(C, rv({-1, 0})).member);

    auto r3 = cone_member({iv({1, 1})}, rv({3, 3}));
    REQUIRE(r3.member);
    CHECK(r3.certificate == rv({3}));

    // empty generator set
    CHECK(cone_member({}, rv({0, 0})).member);
    CHECK(!cone_member({}, rv({1, 0})).member);

    // certificate reproduces b exactly for random members
    SplitMix64 rng(47);
    for (int iter = 0; iter < 100; ++iter) {
        std::vector<IntVec> gens;
        std::size_t d = 2 + static_cast<std::size_t>(rng.uniform(0, 1));
        for (int g = 0; g < 4; ++g) {
            IntVec v(d);
            for (auto& x : v) x = rng.uniform(-2, 2);
            gens.push_back(std::move(v));
        }
        RatVec target(d);
        for (auto& x : target) x = Rational(rng.uniform(-4, 4));
        auto res = cone_member(gens, target);
        if (!res.member) continue;
        RatVec sum(d);
        for (std::size_t g = 0; g < gens.size(); ++g) {
            CHECK(res.certificate[g].sign() >= 0);
            for (std::size_t j = 0; j < d; ++j)
                sum[j] += res.certificate[g] * Rational(gens[g][j]);
        }
        CHECK(sum == target);
    }
}
