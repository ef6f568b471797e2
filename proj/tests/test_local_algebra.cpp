#include <doctest.h>

#include <jetcalc/jetcalc.hpp>

#include "test_support.hpp"

using namespace jetcalc;

namespace {

long long binomial(long long n, long long k) {
    long long r = 1;
    for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

}  // namespace

TEST_CASE("dual numbers: basis and nilpotency") {
    LocalAlgebra a = make_local_algebra(1, {Exps{2}});
    REQUIRE(a.dim() == 2);
    CHECK(a.basis[0] == Exps{0});
    CHECK(a.basis[1] == Exps{1});
    CHECK(a.mult[1][1] == -1);  // t*t lies in the ideal
    CHECK(a.mult[0][1] == 1);
}

TEST_CASE("staircase quotient k[s,t]/(s^2, t^3)") {
    LocalAlgebra a = make_local_algebra(2, {Exps{2, 0}, Exps{0, 3}});
    REQUIRE(a.dim() == 6);
    std::vector<Exps> expected = {{0, 0}, {1, 0}, {0, 1}, {1, 1}, {0, 2}, {1, 2}};
    CHECK(a.basis == expected);  // 1, s, t, st, t^2, st^2
    CHECK(a.degrees == std::vector<int>{0, 1, 1, 2, 2, 3});
}

TEST_CASE("non-cofinite ideal names the offending generator") {
    CHECK_THROWS_WITH_AS(make_local_algebra(2, {Exps{2, 0}}), doctest::Contains("'t'"),
                         DomainError);
}

TEST_CASE("standard algebras") {
    LocalAlgebra box = box_algebra(2, 2);
    CHECK(box.dim() == 4);
    CHECK(box.basis == std::vector<Exps>{{0, 0}, {1, 0}, {0, 1}, {1, 1}});

    LocalAlgebra fat = fat_point_algebra(2, 2);
    CHECK(fat.dim() == 3);
    CHECK(fat.basis == std::vector<Exps>{{0, 0}, {1, 0}, {0, 1}});

    LocalAlgebra field = truncation_algebra(0);
    CHECK(field.dim() == 1);
}

TEST_CASE("fat point dimension matches the binomial count") {
    for (int r = 1; r <= 3; ++r)
        for (int m = 1; m <= 4; ++m)
            CHECK(fat_point_algebra(r, m).dim() == binomial(m - 1 + r, r));
}

TEST_CASE("multiplication tables are associative and unital") {
    std::vector<LocalAlgebra> algebras = {
        truncation_algebra(4),
        box_algebra(2, 3),
        fat_point_algebra(2, 4),
        fat_point_algebra(3, 3),
        make_local_algebra(2, {Exps{3, 0}, Exps{1, 2}, Exps{0, 4}}),
    };
    for (const auto& a : algebras) {
        REQUIRE(a.dim() <= 20);
        for (int i = 0; i < a.dim(); ++i) {
            CHECK(a.mult[0][i] == i);
            CHECK(a.mult[i][0] == i);
            for (int j = 0; j < a.dim(); ++j) {
                CHECK(a.mult[i][j] == a.mult[j][i]);
                for (int l = 0; l < a.dim(); ++l) {
                    int ij = a.mult[i][j];
                    int jl = a.mult[j][l];
                    int left = ij < 0 ? -1 : a.mult[ij][l];
                    int right = jl < 0 ? -1 : a.mult[i][jl];
                    CHECK(left == right);
                }
            }
        }
    }
}

TEST_CASE("surjections: truncation and box onto fat point") {
    AlgebraSurjection tr = surjection(truncation_algebra(2), truncation_algebra(1));
    CHECK(tr.basis_embedding == std::vector<int>{0, 1});
    CHECK(tr.dropped_dimension() == 1);

    AlgebraSurjection bf = surjection(box_algebra(2, 2), fat_point_algebra(2, 2));
    CHECK(bf.basis_embedding == std::vector<int>{0, 1, 2});

    CHECK_THROWS_AS(surjection(truncation_algebra(1), fat_point_algebra(2, 2)),
                    DomainError);  // generator counts differ
    CHECK_THROWS_AS(surjection(fat_point_algebra(2, 2), box_algebra(2, 2)),
                    DomainError);  // s*t lies in (s,t)^2 but not in (s^2,t^2)
}

TEST_CASE("surjection target basis is the source basis minus the target ideal") {
    LocalAlgebra src = box_algebra(3, 3);
    LocalAlgebra tgt = make_local_algebra(2, {Exps{2, 0}, Exps{1, 1}, Exps{0, 3}});
    AlgebraSurjection s = surjection(src, tgt);
    std::vector<Exps> expected;
    for (const auto& mono : src.basis)
        if (!tgt.in_ideal(mono)) expected.push_back(mono);
    std::vector<Exps> embedded;
    for (int idx : s.basis_embedding) embedded.push_back(src.basis[static_cast<std::size_t>(idx)]);
    CHECK(embedded == expected);
    CHECK(embedded == tgt.basis);
}

TEST_CASE("grading weights are the basis degrees") {
    auto [graded1, w1] = is_graded(truncation_algebra(2));
    CHECK(graded1);
    CHECK(w1 == std::vector<int>{0, 1, 2});
    auto [graded2, w2] = is_graded(box_algebra(2, 2));
    CHECK(w2 == std::vector<int>{0, 1, 1, 2});
    auto [graded3, w3] = is_graded(fat_point_algebra(2, 3));
    CHECK(w3 == std::vector<int>{0, 1, 1, 2, 2, 2});
}

TEST_CASE("algebra text format") {
    LocalAlgebra a = parse_algebra_text("algvars: s,t\nrelations: s^2, t^3\n");
    CHECK(a.dim() == 6);
    LocalAlgebra b = parse_algebra_text("# fat point\nalgvars: s,t\npower: 3\n");
    CHECK(b.dim() == 6);
    CHECK(b.basis == fat_point_algebra(2, 3).basis);
    CHECK_THROWS_AS(parse_algebra_text("algvars: s,t\n"), ParseError);
    CHECK_THROWS_AS(parse_algebra_text("relations: s^2\n"), ParseError);
    CHECK_THROWS_AS(parse_algebra_text("algvars: s,t\nrelations: s + t\n"), ParseError);
}
