#pragma once

// Defining equations of the scheme of A-jets of an affine scheme.
//
// Fix an ideal (f_1..f_r) in k[x_1..x_N] and a finite local algebra A with
// basis e_1..e_m (unit first).  Substituting x_j -> sum_i a_i_j e_i and
// expanding through the multiplication table of A writes each f_a as
// sum_i P_a_i(...) e_i; the coefficients P_a_i cut out the jet scheme in
// affine N*m-space.  Coordinates are ordered j-major (all coordinates of
// x_1 first) and named a_<i>_<j>; coordinate a_i_j carries weight deg(e_i),
// which makes every P_a_i quasi-homogeneous.
//
// Exactly r*m equations are produced, zero polynomials included.

#include <algorithm>
#include <string>
#include <vector>

#include "errors.hpp"
#include "local_algebra.hpp"
#include "polynomial.hpp"

namespace jetcalc {

struct JetSystem {
    IdealPresentation ideal;   // the input presentation
    LocalAlgebra algebra;
    std::vector<std::string> coord_names;  // size N*m
    std::vector<Polynomial> equations;     // size r*m, generator-major
    std::vector<int> weights;              // weight of each coordinate

    std::size_t ambient_vars() const { return ideal.vars.size(); }
    std::size_t algebra_dim() const { return static_cast<std::size_t>(algebra.dim()); }

    // Coordinate a_(i+1)_(j+1) lives at j*m + i.
    std::size_t coord_index(std::size_t basis_i, std::size_t var_j) const {
        return var_j * algebra_dim() + basis_i;
    }

    const Polynomial& equation(std::size_t generator_a, std::size_t basis_i) const {
        return equations[generator_a * algebra_dim() + basis_i];
    }

    IdealPresentation as_ideal() const {
        return IdealPresentation{coord_names, ideal.field, equations};
    }
};

inline std::vector<std::string> jet_coordinate_names(std::size_t ambient_vars,
                                                     std::size_t algebra_dim) {
    std::vector<std::string> names;
    names.reserve(ambient_vars * algebra_dim);
    for (std::size_t j = 0; j < ambient_vars; ++j)
        for (std::size_t i = 0; i < algebra_dim; ++i)
            names.push_back("a_" + std::to_string(i + 1) + "_" + std::to_string(j + 1));
    return names;
}

// Degrevlex with highest-weight coordinates most significant.  Dimension is
// order-independent, but Buchberger runs far faster on jet systems in this
// order than in the plain coordinate order.
inline MonomialOrder jet_dimension_order(std::size_t ambient_vars, std::size_t algebra_dim) {
    MonomialOrder order;
    order.var_order.reserve(ambient_vars * algebra_dim);
    for (std::size_t i = algebra_dim; i-- > 0;)
        for (std::size_t j = 0; j < ambient_vars; ++j)
            order.var_order.push_back(static_cast<int>(j * algebra_dim + i));
    return order;
}

namespace detail {

// An element of A tensor k[coordinates], stored componentwise.
using AlgebraElement = std::vector<Polynomial>;

inline AlgebraElement algebra_zero(const LocalAlgebra& alg,
                                   const std::vector<std::string>& vars,
                                   const FieldSpec& field) {
    return AlgebraElement(static_cast<std::size_t>(alg.dim()),
                          Polynomial::zero(vars, field));
}

inline AlgebraElement algebra_mul(const LocalAlgebra& alg, const AlgebraElement& u,
                                  const AlgebraElement& v) {
    AlgebraElement w(u.size(), Polynomial::zero(u[0].variables(), u[0].field()));
    for (std::size_t i = 0; i < u.size(); ++i) {
        if (u[i].is_zero()) continue;
        for (std::size_t j = 0; j < v.size(); ++j) {
            if (v[j].is_zero()) continue;
            int l = alg.mult[i][j];
            if (l >= 0) w[static_cast<std::size_t>(l)] += u[i] * v[j];
        }
    }
    return w;
}

}  // namespace detail

inline JetSystem generate_jet_equations(const IdealPresentation& ideal,
                                        const LocalAlgebra& algebra) {
    ideal.validate();
    std::size_t n = ideal.vars.size();
    std::size_t m = static_cast<std::size_t>(algebra.dim());

    JetSystem sys;
    sys.ideal = ideal;
    sys.algebra = algebra;
    sys.coord_names = jet_coordinate_names(n, m);
    sys.weights.reserve(n * m);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < m; ++i) sys.weights.push_back(algebra.degrees[i]);

    // x_j expands to the coordinate column (a_1_j, ..., a_m_j).
    std::vector<detail::AlgebraElement> coord_columns(n);
    for (std::size_t j = 0; j < n; ++j) {
        coord_columns[j] = detail::algebra_zero(algebra, sys.coord_names, ideal.field);
        for (std::size_t i = 0; i < m; ++i)
            coord_columns[j][i] =
                Polynomial::variable(sys.coord_names, ideal.field, sys.coord_index(i, j));
    }

    detail::AlgebraElement unit = detail::algebra_zero(algebra, sys.coord_names, ideal.field);
    unit[0] = Polynomial::constant(sys.coord_names, ideal.field, Rational(1));

    // Power cache per ambient variable.
    std::vector<std::vector<detail::AlgebraElement>> powers(n);
    auto power_of = [&](std::size_t j, int e) -> const detail::AlgebraElement& {
        auto& cache = powers[j];
        if (cache.empty()) cache.push_back(unit);
        while (static_cast<int>(cache.size()) <= e)
            cache.push_back(detail::algebra_mul(algebra, cache.back(), coord_columns[j]));
        return cache[static_cast<std::size_t>(e)];
    };

    sys.equations.reserve(ideal.generators.size() * m);
    for (const auto& gen : ideal.generators) {
        detail::AlgebraElement acc =
            detail::algebra_zero(algebra, sys.coord_names, ideal.field);
        for (const auto& [e, c] : gen.terms()) {
            detail::AlgebraElement term = unit;
            for (std::size_t j = 0; j < n; ++j)
                if (e[j] > 0) term = detail::algebra_mul(algebra, term, power_of(j, e[j]));
            for (std::size_t i = 0; i < m; ++i)
                if (!term[i].is_zero()) acc[i] += term[i].scaled(c);
        }
        for (std::size_t i = 0; i < m; ++i) sys.equations.push_back(std::move(acc[i]));
    }

    if (sys.equations.size() != ideal.generators.size() * m)
        throw InternalError("jet system equation count is not r*m");
    return sys;
}

// The coordinate projection realizing J_A(X) -> J_A'(X) for a surjection
// A -> A'.  Source coordinates over basis elements surviving into A' map
// to the matching target coordinates; the rest are dropped.
struct CoordinateProjection {
    AlgebraSurjection surj;
    std::vector<std::string> source_coords;
    std::vector<std::string> target_coords;
    std::vector<int> source_to_target;  // coordinate index map, -1 = dropped
    std::vector<int> target_to_source;
};

inline CoordinateProjection truncation_substitution(const JetSystem& source_system,
                                                    const AlgebraSurjection& surj) {
    if (!(source_system.algebra == surj.source))
        throw DomainError("truncation_substitution: system was not built over the "
                          "source algebra");
    std::size_t n = source_system.ambient_vars();
    std::size_t m_src = static_cast<std::size_t>(surj.source.dim());
    std::size_t m_tgt = static_cast<std::size_t>(surj.target.dim());

    CoordinateProjection proj;
    proj.surj = surj;
    proj.source_coords = source_system.coord_names;
    proj.target_coords = jet_coordinate_names(n, m_tgt);
    proj.source_to_target.assign(n * m_src, -1);
    proj.target_to_source.assign(n * m_tgt, -1);
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t it = 0; it < m_tgt; ++it) {
            std::size_t is = static_cast<std::size_t>(surj.basis_embedding[it]);
            std::size_t src = j * m_src + is;
            std::size_t tgt = j * m_tgt + it;
            proj.source_to_target[src] = static_cast<int>(tgt);
            proj.target_to_source[tgt] = static_cast<int>(src);
        }
    }
    return proj;
}

// Rewrites a source-system polynomial in the target coordinates.  Fails if
// the polynomial touches a dropped coordinate.
inline Polynomial project_polynomial(const CoordinateProjection& proj, const Polynomial& p) {
    Polynomial out = Polynomial::zero(proj.target_coords, p.field());
    for (const auto& [e, c] : p.terms()) {
        Exps mapped(proj.target_coords.size(), 0);
        for (std::size_t v = 0; v < e.size(); ++v) {
            if (e[v] == 0) continue;
            int t = proj.source_to_target[v];
            if (t < 0)
                throw DomainError("polynomial involves a coordinate dropped by the "
                                  "projection: " + proj.source_coords[v]);
            mapped[static_cast<std::size_t>(t)] = e[v];
        }
        out.add_term(std::move(mapped), c);
    }
    return out;
}

// The equations of the source system indexed by surviving basis elements,
// rewritten in target coordinates.  For monomial algebras this reproduces
// the target system verbatim.
inline std::vector<Polynomial> restricted_equations(const JetSystem& source_system,
                                                    const CoordinateProjection& proj) {
    std::size_t m_tgt = static_cast<std::size_t>(proj.surj.target.dim());
    std::vector<Polynomial> out;
    out.reserve(source_system.ideal.generators.size() * m_tgt);
    for (std::size_t a = 0; a < source_system.ideal.generators.size(); ++a)
        for (std::size_t it = 0; it < m_tgt; ++it) {
            std::size_t is = static_cast<std::size_t>(proj.surj.basis_embedding[it]);
            out.push_back(project_polynomial(proj, source_system.equation(a, is)));
        }
    return out;
}

inline std::vector<Rational> project_point(const CoordinateProjection& proj,
                                           const std::vector<Rational>& source_point) {
    if (source_point.size() != proj.source_coords.size())
        throw DomainError("project_point: wrong source point length");
    std::vector<Rational> out(proj.target_coords.size());
    for (std::size_t t = 0; t < out.size(); ++t)
        out[t] = source_point[static_cast<std::size_t>(proj.target_to_source[t])];
    return out;
}

// Jet equations plus the pullback of Z along the base projection, which in
// these coordinates just substitutes the unit-row coordinates a_1_j.
inline IdealPresentation fiber_ideal(const JetSystem& sys, const IdealPresentation& center) {
    center.validate();
    if (center.vars != sys.ideal.vars)
        throw DomainError("fiber_ideal: center ideal has different ambient variables");
    if (!(center.field == sys.ideal.field))
        throw DomainError("fiber_ideal: center ideal has different field");

    std::vector<Polynomial> unit_row;
    unit_row.reserve(sys.ambient_vars());
    for (std::size_t j = 0; j < sys.ambient_vars(); ++j)
        unit_row.push_back(
            Polynomial::variable(sys.coord_names, sys.ideal.field, sys.coord_index(0, j)));

    IdealPresentation out = sys.as_ideal();
    for (const auto& g : center.generators) out.generators.push_back(substitute(g, unit_row));
    return out;
}

// The section X -> J_A(X): unit-row coordinates carry the point, all other
// coordinates are zero.  The point must lie on X.
inline std::vector<Rational> zero_section(const JetSystem& sys,
                                          const std::vector<Rational>& point) {
    if (point.size() != sys.ambient_vars())
        throw DomainError("zero_section: point has wrong length");
    for (const auto& g : sys.ideal.generators)
        if (g.eval(point) != 0)
            throw DomainError("zero_section: point does not lie on the scheme");
    std::vector<Rational> out(sys.coord_names.size(), Rational(0));
    for (std::size_t j = 0; j < sys.ambient_vars(); ++j)
        out[sys.coord_index(0, j)] = point[j];
    return out;
}

}  // namespace jetcalc
