#pragma once

// Shared helpers for the test suites: a seeded generator for random
// polynomials and small monomial algebras, and an exhaustive dimension
// oracle for monomial ideals.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include <jetcalc/jetcalc.hpp>

namespace testsupport {

using namespace jetcalc;

inline Polynomial random_polynomial(std::mt19937& rng, const std::vector<std::string>& vars,
                                    FieldSpec field, int max_terms = 4, int max_exp = 3,
                                    int max_coeff = 9) {
    std::uniform_int_distribution<int> nterms(0, max_terms);
    std::uniform_int_distribution<int> exp(0, max_exp);
    std::uniform_int_distribution<int> coeff(-max_coeff, max_coeff);
    Polynomial p = Polynomial::zero(vars, field);
    int t = nterms(rng);
    for (int k = 0; k < t; ++k) {
        Exps e(vars.size());
        for (auto& v : e) v = exp(rng);
        p.add_term(std::move(e), Rational(coeff(rng)));
    }
    return p;
}

// Random cofinite monomial algebra on two generators with dim <= max_dim.
inline LocalAlgebra random_monomial_algebra(std::mt19937& rng, int max_dim = 6) {
    std::uniform_int_distribution<int> bound(1, 3);
    std::uniform_int_distribution<int> coin(0, 1);
    while (true) {
        int p = bound(rng), q = bound(rng);
        std::vector<Exps> rels = {Exps{p, 0}, Exps{0, q}};
        if (coin(rng) && p > 1 && q > 1) rels.push_back(Exps{p - 1, q - 1});
        LocalAlgebra a = make_local_algebra(2, rels);
        if (a.dim() <= max_dim) return a;
    }
}

// Exhaustive oracle: largest subset of variables containing no support.
inline long long monomial_dimension_exhaustive(const std::vector<std::uint64_t>& supports,
                                               std::size_t nvars) {
    for (std::uint64_t s : supports)
        if (s == 0) return -1;
    long long best = -1;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << nvars); ++mask) {
        bool independent = true;
        for (std::uint64_t s : supports)
            if ((s & ~mask) == 0) {
                independent = false;
                break;
            }
        if (!independent) continue;
        long long bits = 0;
        for (std::uint64_t m = mask; m; m &= m - 1) ++bits;
        best = std::max(best, bits);
    }
    return best;
}

inline IdealPresentation ideal_of(const std::vector<std::string>& vars,
                                  const std::vector<std::string>& polys,
                                  std::uint32_t characteristic = 0) {
    FieldSpec field{characteristic};
    std::vector<Polynomial> gens;
    for (const auto& s : polys) gens.push_back(parse_polynomial(s, vars, field));
    return IdealPresentation{vars, field, std::move(gens)};
}

}  // namespace testsupport
