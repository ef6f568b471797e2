#include <doctest.h>

#include <jetcalc/jetcalc.hpp>

#include <random>

#include "test_support.hpp"

using namespace jetcalc;
using testsupport::ideal_of;
using testsupport::random_monomial_algebra;
using testsupport::random_polynomial;

namespace {
const FieldSpec QQ{};

Polynomial coord_poly(const JetSystem& sys, std::size_t i, std::size_t j) {
    return Polynomial::variable(sys.coord_names, sys.ideal.field, sys.coord_index(i, j));
}
}  // namespace

TEST_CASE("jets of x^2 over the dual numbers") {
    JetSystem sys = generate_jet_equations(ideal_of({"x"}, {"x^2"}), truncation_algebra(1));
    REQUIRE(sys.equations.size() == 2);
    Polynomial a1 = coord_poly(sys, 0, 0), a2 = coord_poly(sys, 1, 0);
    CHECK(sys.equation(0, 0) == a1 * a1);
    CHECK(sys.equation(0, 1) == (a1 * a2).scaled(Rational(2)));
}

TEST_CASE("a linear generator kills every coordinate") {
    for (const LocalAlgebra& alg :
         {truncation_algebra(3), box_algebra(2, 2), fat_point_algebra(2, 3)}) {
        JetSystem sys = generate_jet_equations(ideal_of({"x"}, {"x"}), alg);
        REQUIRE(sys.equations.size() == static_cast<std::size_t>(alg.dim()));
        for (std::size_t i = 0; i < sys.algebra_dim(); ++i)
            CHECK(sys.equation(0, i) == coord_poly(sys, i, 0));
    }
}

TEST_CASE("jets of a smooth parabola") {
    JetSystem sys =
        generate_jet_equations(ideal_of({"x", "y"}, {"y - x^2"}), truncation_algebra(1));
    Polynomial a1 = coord_poly(sys, 0, 0), a2 = coord_poly(sys, 1, 0);
    Polynomial b1 = coord_poly(sys, 0, 1), b2 = coord_poly(sys, 1, 1);
    CHECK(sys.equation(0, 0) == b1 - a1 * a1);
    CHECK(sys.equation(0, 1) == b2 - (a1 * a2).scaled(Rational(2)));
}

TEST_CASE("equation count is generators times algebra dimension") {
    std::mt19937 rng(99);
    std::vector<std::string> xy = {"x", "y"};
    for (int it = 0; it < 20; ++it) {
        std::vector<Polynomial> gens;
        int r = 1 + static_cast<int>(rng() % 3);
        for (int k = 0; k < r; ++k) gens.push_back(random_polynomial(rng, xy, QQ));
        IdealPresentation ideal{xy, QQ, gens};
        LocalAlgebra alg = random_monomial_algebra(rng);
        JetSystem sys = generate_jet_equations(ideal, alg);
        CHECK(sys.equations.size() ==
              gens.size() * static_cast<std::size_t>(alg.dim()));
    }
}

TEST_CASE("quasi-homogeneity: scaling coordinates by weight scales equations") {
    std::mt19937 rng(2024);
    std::vector<std::string> xy = {"x", "y"};
    for (int it = 0; it < 25; ++it) {
        std::vector<Polynomial> gens = {random_polynomial(rng, xy, QQ, 4, 3, 5)};
        IdealPresentation ideal{xy, QQ, gens};
        LocalAlgebra alg = random_monomial_algebra(rng);
        JetSystem sys = generate_jet_equations(ideal, alg);

        std::vector<std::string> extended = sys.coord_names;
        extended.push_back("lam");
        Polynomial lam = Polynomial::variable(extended, QQ, extended.size() - 1);
        std::vector<Polynomial> scaled_images, plain_images;
        for (std::size_t v = 0; v < sys.coord_names.size(); ++v) {
            Polynomial coord = Polynomial::variable(extended, QQ, v);
            plain_images.push_back(coord);
            scaled_images.push_back(coord *
                                    lam.pow(static_cast<unsigned>(sys.weights[v])));
        }
        for (std::size_t a = 0; a < ideal.generators.size(); ++a)
            for (std::size_t i = 0; i < sys.algebra_dim(); ++i) {
                const Polynomial& eq = sys.equation(a, i);
                Polynomial lhs = substitute(eq, scaled_images);
                Polynomial rhs = substitute(eq, plain_images) *
                                 lam.pow(static_cast<unsigned>(alg.degrees[i]));
                CHECK(lhs == rhs);
            }
    }
}

TEST_CASE("truncation projection reproduces the smaller system") {
    IdealPresentation ideal = ideal_of({"x"}, {"x^2"});
    JetSystem src = generate_jet_equations(ideal, truncation_algebra(2));
    AlgebraSurjection surj = surjection(truncation_algebra(2), truncation_algebra(1));
    CoordinateProjection proj = truncation_substitution(src, surj);

    JetSystem tgt = generate_jet_equations(ideal, truncation_algebra(1));
    CHECK(restricted_equations(src, proj) == tgt.equations);

    // the dropped coordinate is rejected
    Polynomial a3 = coord_poly(src, 2, 0);
    CHECK_THROWS_AS(project_polynomial(proj, a3), DomainError);

    // identity surjection gives the identity projection
    AlgebraSurjection id = surjection(truncation_algebra(2), truncation_algebra(2));
    CoordinateProjection idproj = truncation_substitution(src, id);
    CHECK(restricted_equations(src, idproj) == src.equations);
}

TEST_CASE("projection to the trivial algebra recovers the base equations") {
    IdealPresentation ideal = ideal_of({"x", "y"}, {"x*y", "x^2 + y^3"});
    JetSystem src = generate_jet_equations(ideal, truncation_algebra(2));
    AlgebraSurjection surj = surjection(truncation_algebra(2), truncation_algebra(0));
    CoordinateProjection proj = truncation_substitution(src, surj);
    std::vector<Polynomial> restricted = restricted_equations(src, proj);
    JetSystem base = generate_jet_equations(ideal, truncation_algebra(0));
    CHECK(restricted == base.equations);
    // J_k(X) = X: the equations are the original generators in the unit row
    REQUIRE(restricted.size() == 2);
    CHECK(restricted[1].terms().size() == 2);  // x^2 + y^3 in the unit coordinates
}

TEST_CASE("truncation projection rejects a mismatched system") {
    IdealPresentation ideal = ideal_of({"x"}, {"x^2"});
    JetSystem sys = generate_jet_equations(ideal, truncation_algebra(2));
    AlgebraSurjection other = surjection(truncation_algebra(3), truncation_algebra(1));
    CHECK_THROWS_AS(truncation_substitution(sys, other), DomainError);
}

TEST_CASE("truncation projection for box onto fat point") {
    IdealPresentation ideal = ideal_of({"x", "y"}, {"x^2 + y^3"});
    JetSystem src = generate_jet_equations(ideal, box_algebra(2, 2));
    AlgebraSurjection surj = surjection(box_algebra(2, 2), fat_point_algebra(2, 2));
    CoordinateProjection proj = truncation_substitution(src, surj);
    JetSystem tgt = generate_jet_equations(ideal, fat_point_algebra(2, 2));
    CHECK(restricted_equations(src, proj) == tgt.equations);
}

TEST_CASE("fiber ideal over a center") {
    IdealPresentation node = ideal_of({"x", "y"}, {"x*y"});
    JetSystem sys = generate_jet_equations(node, truncation_algebra(1));

    IdealPresentation origin = ideal_of({"x", "y"}, {"x", "y"});
    IdealPresentation fib = fiber_ideal(sys, origin);
    REQUIRE(fib.generators.size() == 4);
    CHECK(fib.generators[2] == coord_poly(sys, 0, 0));
    CHECK(fib.generators[3] == coord_poly(sys, 0, 1));

    IdealPresentation unit = ideal_of({"x", "y"}, {"1"});
    IdealPresentation fib_unit = fiber_ideal(sys, unit);
    CHECK(fib_unit.generators.back() ==
          Polynomial::constant(sys.coord_names, QQ, Rational(1)));

    IdealPresentation zero{{"x", "y"}, QQ, {}};
    CHECK(fiber_ideal(sys, zero).generators == sys.equations);

    IdealPresentation wrong = ideal_of({"x", "z"}, {"x"});
    CHECK_THROWS_AS(fiber_ideal(sys, wrong), DomainError);
}

TEST_CASE("zero section lands on the jet scheme") {
    IdealPresentation node = ideal_of({"x", "y"}, {"x*y"});
    JetSystem sys4 = generate_jet_equations(node, box_algebra(2, 2));
    std::vector<Rational> z = zero_section(sys4, {Rational(0), Rational(0)});
    CHECK(z == std::vector<Rational>(8, Rational(0)));
    for (const auto& eq : sys4.equations) CHECK(eq.eval(z) == 0);

    IdealPresentation parabola = ideal_of({"x", "y"}, {"y - x^2"});
    JetSystem sys = generate_jet_equations(parabola, truncation_algebra(1));
    std::vector<Rational> s = zero_section(sys, {Rational(2), Rational(4)});
    CHECK(s == std::vector<Rational>{Rational(2), Rational(0), Rational(4), Rational(0)});
    for (const auto& eq : sys.equations) CHECK(eq.eval(s) == 0);

    CHECK_THROWS_AS(zero_section(sys4, {Rational(1), Rational(1)}), DomainError);
}

TEST_CASE("box-algebra jets have the dimension of iterated jets") {
    IdealPresentation node = ideal_of({"x", "y"}, {"x*y"});
    GroebnerOptions opt;
    opt.budget = 2000000;
    long long direct =
        krull_dimension(generate_jet_equations(node, box_algebra(2, 3)).as_ideal(), opt);
    IdealPresentation stage1 =
        generate_jet_equations(node, truncation_algebra(2)).as_ideal();
    long long iterated =
        krull_dimension(generate_jet_equations(stage1, truncation_algebra(1)).as_ideal(), opt);
    CHECK(direct == iterated);
}

TEST_CASE("zero section composed with projection") {
    IdealPresentation node = ideal_of({"x", "y"}, {"x*y"});
    JetSystem src = generate_jet_equations(node, truncation_algebra(2));
    AlgebraSurjection surj = surjection(truncation_algebra(2), truncation_algebra(1));
    CoordinateProjection proj = truncation_substitution(src, surj);
    JetSystem tgt = generate_jet_equations(node, truncation_algebra(1));
    std::vector<Rational> pt = {Rational(0), Rational(3)};
    CHECK(project_point(proj, zero_section(src, pt)) == zero_section(tgt, pt));
}
