#pragma once

// Finite local k-algebras presented as quotients of k[t_1..t_r] by a
// cofinite monomial ideal.  The standard monomials (those outside the
// ideal) form the basis, ordered by total degree with the unit first, so
// the residue-field projection is "take the coordinate of basis[0]".
// Products of basis monomials are either basis monomials or fall into the
// ideal, so the multiplication table stores a basis index or -1.

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "errors.hpp"
#include "monomial_order.hpp"

namespace jetcalc {

struct LocalAlgebra {
    std::vector<std::string> gens;        // generator names t_1..t_r
    std::vector<Exps> relations;          // monomial ideal generators
    std::vector<Exps> basis;              // standard monomials, unit first
    std::vector<std::vector<int>> mult;   // mult[i][j] = basis index or -1
    std::vector<int> degrees;             // degrees[i] = total degree of basis[i]

    int dim() const { return static_cast<int>(basis.size()); }
    std::size_t embdim() const { return gens.size(); }

    bool in_ideal(const Exps& monomial) const {
        return std::any_of(relations.begin(), relations.end(),
                           [&](const Exps& rel) { return divides(rel, monomial); });
    }

    int basis_index(const Exps& monomial) const {
        for (std::size_t i = 0; i < basis.size(); ++i)
            if (basis[i] == monomial) return static_cast<int>(i);
        return -1;
    }

    // Pretty form, e.g. "k[s,t]/(s^2, t^3)".
    std::string describe() const {
        std::ostringstream out;
        out << "k[";
        for (std::size_t i = 0; i < gens.size(); ++i) out << (i ? "," : "") << gens[i];
        out << "]/(";
        for (std::size_t i = 0; i < relations.size(); ++i) {
            if (i) out << ", ";
            out << monomial_string(relations[i]);
        }
        out << ")";
        return out.str();
    }

    std::string canonical_text() const {
        std::ostringstream out;
        out << "algvars: ";
        for (std::size_t i = 0; i < gens.size(); ++i) out << (i ? "," : "") << gens[i];
        out << "\nrelations: ";
        for (std::size_t i = 0; i < relations.size(); ++i) {
            if (i) out << ", ";
            out << monomial_string(relations[i]);
        }
        out << "\n";
        return out.str();
    }

    std::string monomial_string(const Exps& e) const {
        std::string s;
        for (std::size_t j = 0; j < e.size(); ++j) {
            if (e[j] == 0) continue;
            if (!s.empty()) s += "*";
            s += gens[j];
            if (e[j] > 1) s += "^" + std::to_string(e[j]);
        }
        return s.empty() ? "1" : s;
    }

    bool operator==(const LocalAlgebra& o) const {
        return gens == o.gens && basis == o.basis;
    }
};

namespace detail {

// Basis order: total degree first, then lexicographically with generator
// t_1 heaviest (so for k[s,t]: 1, s, t, s^2, s*t, t^2, ...).
inline bool basis_order_less(const Exps& a, const Exps& b) {
    long long da = total_degree(a), db = total_degree(b);
    if (da != db) return da < db;
    return lex_less(b, a);
}

}  // namespace detail

inline std::vector<std::string> default_generator_names(std::size_t r) {
    if (r == 1) return {"t"};
    if (r == 2) return {"s", "t"};
    std::vector<std::string> names;
    for (std::size_t i = 1; i <= r; ++i) names.push_back("t" + std::to_string(i));
    return names;
}

// Builds the quotient of k[t_1..t_r] by the monomial ideal the given
// exponent vectors generate.  Fails when the ideal is not cofinite, naming
// a generator with no pure power in the ideal.
inline LocalAlgebra make_local_algebra(std::vector<std::string> gen_names,
                                       std::vector<Exps> relations) {
    std::size_t r = gen_names.size();
    if (r == 0) throw DomainError("local algebra needs at least one generator");
    if (relations.empty()) throw DomainError("local algebra needs at least one relation");
    for (const auto& rel : relations) {
        if (rel.size() != r) throw DomainError("relation has wrong exponent length");
        if (total_degree(rel) == 0)
            throw DomainError("relation 1 would make the zero algebra");
    }

    // Cofinite <=> every generator has a pure power among the relations.
    std::vector<int> pure_bound(r, -1);
    for (const auto& rel : relations) {
        int support_var = -1;
        bool pure = true;
        for (std::size_t j = 0; j < r; ++j) {
            if (rel[j] == 0) continue;
            if (support_var >= 0) { pure = false; break; }
            support_var = static_cast<int>(j);
        }
        if (pure && support_var >= 0) {
            int& bound = pure_bound[static_cast<std::size_t>(support_var)];
            if (bound < 0 || rel[static_cast<std::size_t>(support_var)] < bound)
                bound = rel[static_cast<std::size_t>(support_var)];
        }
    }
    for (std::size_t j = 0; j < r; ++j)
        if (pure_bound[j] < 0)
            throw DomainError("monomial ideal is not cofinite: no pure power of '" +
                              gen_names[j] + "' among the relations");

    LocalAlgebra alg;
    alg.gens = std::move(gen_names);
    alg.relations = std::move(relations);

    // Standard monomials live below the pure-power box.
    Exps current(r, 0);
    while (true) {
        if (!alg.in_ideal(current)) alg.basis.push_back(current);
        std::size_t j = 0;
        while (j < r) {
            if (current[j] + 1 < pure_bound[j]) {
                ++current[j];
                break;
            }
            current[j] = 0;
            ++j;
        }
        if (j == r) break;
    }
    std::sort(alg.basis.begin(), alg.basis.end(), detail::basis_order_less);

    std::map<Exps, int> index_of;
    for (std::size_t i = 0; i < alg.basis.size(); ++i)
        index_of[alg.basis[i]] = static_cast<int>(i);

    std::size_t m = alg.basis.size();
    alg.mult.assign(m, std::vector<int>(m, -1));
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
            Exps prod = exps_add(alg.basis[i], alg.basis[j]);
            auto it = index_of.find(prod);
            if (it != index_of.end())
                alg.mult[i][j] = it->second;
            else if (!alg.in_ideal(prod))
                throw InternalError("product of standard monomials escaped the basis");
        }
    }

    alg.degrees.reserve(m);
    for (const auto& b : alg.basis)
        alg.degrees.push_back(static_cast<int>(total_degree(b)));
    return alg;
}

inline LocalAlgebra make_local_algebra(std::size_t r, std::vector<Exps> relations) {
    return make_local_algebra(default_generator_names(r), std::move(relations));
}

// k[t]/(t^(m+1)); truncation 0 is the field itself.
inline LocalAlgebra truncation_algebra(int m) {
    if (m < 0) throw DomainError("truncation order must be >= 0");
    return make_local_algebra(1, {Exps{m + 1}});
}

// k[s,t]/(s^p, t^q), dimension p*q.
inline LocalAlgebra box_algebra(int p, int q) {
    if (p < 1 || q < 1) throw DomainError("box algebra parameters must be >= 1");
    return make_local_algebra(2, {Exps{p, 0}, Exps{0, q}});
}

// k[x_1..x_r]/(x_1..x_r)^m, dimension C(m-1+r, r).
inline LocalAlgebra fat_point_algebra(int r, int m) {
    if (r < 1 || m < 1) throw DomainError("fat point parameters must be >= 1");
    std::vector<Exps> rels;
    Exps e(static_cast<std::size_t>(r), 0);
    // All monomials of total degree m.
    auto emit = [&](auto&& self, std::size_t pos, int remaining) -> void {
        if (pos + 1 == static_cast<std::size_t>(r)) {
            e[pos] = remaining;
            rels.push_back(e);
            return;
        }
        for (int v = remaining; v >= 0; --v) {
            e[pos] = v;
            self(self, pos + 1, remaining - v);
        }
    };
    emit(emit, 0, m);
    return make_local_algebra(static_cast<std::size_t>(r), std::move(rels));
}

struct AlgebraSurjection {
    LocalAlgebra source;
    LocalAlgebra target;
    std::vector<int> basis_embedding;  // target basis index -> source basis index

    int dropped_dimension() const { return source.dim() - target.dim(); }
};

// The identity on generators induces A -> A' exactly when every source
// relation lies in the target ideal.  The target basis is then a subset of
// the source basis, matched monomial by monomial.
inline AlgebraSurjection surjection(const LocalAlgebra& source, const LocalAlgebra& target) {
    if (source.gens.size() != target.gens.size())
        throw DomainError("surjection: generator counts differ");
    for (const auto& rel : source.relations)
        if (!target.in_ideal(rel))
            throw DomainError("no surjection: source relation " +
                              source.monomial_string(rel) +
                              " does not lie in the target ideal");
    AlgebraSurjection s{source, target, {}};
    s.basis_embedding.reserve(target.basis.size());
    for (const auto& mono : target.basis) {
        int idx = source.basis_index(mono);
        if (idx < 0)
            throw InternalError("target basis monomial missing from source basis");
        s.basis_embedding.push_back(idx);
    }
    return s;
}

// Monomial quotients are always graded by total degree; the weights are
// the basis degrees.  The bool mirrors the general-algebra interface.
inline std::pair<bool, std::vector<int>> is_graded(const LocalAlgebra& a) {
    return {true, a.degrees};
}

}  // namespace jetcalc
