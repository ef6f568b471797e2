#include <doctest.h>

#include <jetcalc/jetcalc.hpp>

#include <random>

using namespace jetcalc;

namespace {

// Embedded resolution of the cusp: strict transform plus three
// exceptional divisors, with the last one meeting the other three.
ResolutionData cusp_data() {
    ResolutionData r;
    r.ambient_dim = 2;
    r.divisors = {{"E0", 1, 0, false}, {"E1", 2, 1, false}, {"E2", 3, 2, false},
                  {"E3", 6, 4, false}};
    r.faces = {{0, 3}, {1, 3}, {2, 3}};
    r.validate_and_complete();
    return r;
}

ResolutionData blowup_origin_of_line() {
    // blow-up of the origin in the plane, ideal (x): exceptional divisor
    // and the strict transform of the line
    ResolutionData r;
    r.ambient_dim = 2;
    r.divisors = {{"E", 1, 1, true}, {"L", 1, 0, false}};
    r.faces = {{0, 1}};
    r.validate_and_complete();
    return r;
}

}  // namespace

TEST_CASE("json round trip and validation") {
    auto j = nlohmann::json::parse(R"({
      "ambient_dim": 2,
      "divisors": [
        {"id": "E0", "a": 1, "k": 0},
        {"id": "E1", "a": 2, "k": 1, "center_in_Z": true}
      ],
      "faces": [["E0", "E1"]]
    })");
    ResolutionData r = ResolutionData::from_json(j);
    CHECK(r.ambient_dim == 2);
    REQUIRE(r.divisors.size() == 2);
    CHECK(r.divisors[1].center_in_Z);
    // singletons inserted and the pair kept
    CHECK(r.faces.size() == 3);

    auto bad = j;
    bad["faces"] = {{"E0", "MISSING"}};
    CHECK_THROWS_AS(ResolutionData::from_json(bad), DomainError);
    auto dup = j;
    dup["divisors"][1]["id"] = "E0";
    CHECK_THROWS_AS(ResolutionData::from_json(dup), DomainError);
}

TEST_CASE("downward closure of faces") {
    ResolutionData r;
    r.ambient_dim = 3;
    r.divisors = {{"A", 1, 0, false}, {"B", 1, 0, false}, {"C", 1, 0, false}};
    r.faces = {{0, 1, 2}};
    r.validate_and_complete();
    CHECK(r.faces.size() == 7);  // all nonempty subsets
}

TEST_CASE("lct from resolution data") {
    CHECK(lct_from_resolution(cusp_data()) == Rational(5, 6));
    ResolutionData single;
    single.ambient_dim = 2;
    single.divisors = {{"E", 1, 0, false}};
    single.validate_and_complete();
    CHECK(lct_from_resolution(single) == Rational(1));

    ResolutionData point;
    point.ambient_dim = 2;
    point.divisors = {{"E", 1, 1, true}};
    point.validate_and_complete();
    CHECK(lct_from_resolution(point) == Rational(2));

    ResolutionData degenerate;
    degenerate.ambient_dim = 2;
    degenerate.divisors = {{"E", 0, 1, false}};
    degenerate.validate_and_complete();
    CHECK_THROWS_AS(lct_from_resolution(degenerate), DomainError);
}

TEST_CASE("contact codimension: single divisors") {
    ResolutionData smooth;
    smooth.ambient_dim = 2;
    smooth.divisors = {{"E", 1, 0, false}};
    smooth.validate_and_complete();
    for (long long m = 1; m <= 8; ++m) {
        CHECK(contact_codim(smooth, m) == m);
        CHECK(contact_codim_bruteforce(smooth, m) == m);
    }
    ResolutionData origin;
    origin.ambient_dim = 2;
    origin.divisors = {{"E", 1, 1, true}};
    origin.validate_and_complete();
    for (long long m = 1; m <= 8; ++m) CHECK(contact_codim(origin, m) == 2 * m);
}

TEST_CASE("contact codimension on the cusp") {
    ResolutionData r = cusp_data();
    CHECK(contact_codim(r, 6) == 5);
    CHECK(contact_codim_bruteforce(r, 6) == 5);
    // codim grows as m - floor(m/6)
    for (long long m = 1; m <= 12; ++m)
        CHECK(contact_codim(r, m) == m - m / 6);
}

TEST_CASE("contact codimension: disjoint divisors cannot combine") {
    ResolutionData r;
    r.ambient_dim = 2;
    r.divisors = {{"A", 1, 0, false}, {"B", 1, 0, false}};
    r.validate_and_complete();  // singletons only
    CHECK(contact_codim(r, 3) == 3);
    CHECK(contact_codim_bruteforce(r, 3) == 3);
}

TEST_CASE("infeasible data yields the infinity sentinel") {
    ResolutionData r;
    r.ambient_dim = 2;
    r.divisors = {{"E", 0, 1, false}};
    r.validate_and_complete();
    CHECK_FALSE(contact_codim(r, 4).has_value());
    CHECK_FALSE(contact_codim_bruteforce(r, 4).has_value());
}

TEST_CASE("dp equals brute force on random instances") {
    std::mt19937 rng(1337);
    for (int it = 0; it < 200; ++it) {
        ResolutionData r;
        r.ambient_dim = 2;
        std::size_t nd = 1 + rng() % 5;
        for (std::size_t i = 0; i < nd; ++i)
            r.divisors.push_back({"E" + std::to_string(i),
                                  static_cast<long long>(rng() % 5),
                                  static_cast<long long>(rng() % 4), false});
        std::size_t nfaces = rng() % 4;
        for (std::size_t f = 0; f < nfaces; ++f) {
            std::vector<std::size_t> face;
            for (std::size_t i = 0; i < nd; ++i)
                if (rng() % 2) face.push_back(i);
            if (!face.empty()) r.faces.push_back(face);
        }
        r.validate_and_complete();
        long long m = 1 + rng() % 40;
        CHECK(contact_codim(r, m) == contact_codim_bruteforce(r, m));
    }
}

TEST_CASE("mld from resolution data") {
    ResolutionData r = blowup_origin_of_line();
    CHECK(mld_from_resolution(r, Rational(1)) == ExtValue::finite(Rational(1)));
    CHECK(mld_from_resolution(r, Rational(3)) == ExtValue::minus_inf());

    ResolutionData away;
    away.ambient_dim = 2;
    away.divisors = {{"E", 0, 0, true}};
    away.validate_and_complete();
    CHECK(mld_from_resolution(away, Rational(7)) == ExtValue::finite(Rational(1)));

    ResolutionData nocenter;
    nocenter.ambient_dim = 2;
    nocenter.divisors = {{"E", 1, 0, false}};
    nocenter.validate_and_complete();
    CHECK_THROWS_AS(mld_from_resolution(nocenter, Rational(1)), DomainError);

    ResolutionData line = blowup_origin_of_line();
    line.ambient_dim = 1;
    CHECK_THROWS_AS(mld_from_resolution(line, Rational(1)), DomainError);
    CHECK_THROWS_AS(mld_from_resolution(blowup_origin_of_line(), Rational(-1)),
                    DomainError);
}
