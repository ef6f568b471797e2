#pragma once

// Sparse exact-coefficient multivariate polynomials.
//
// A Polynomial is a map from exponent vectors to nonzero field elements,
// together with its ordered variable list and field.  The term map is kept
// in the canonical monomial order so printing is deterministic; all
// arithmetic is exact.  Values are immutable in spirit: every operation
// returns a fresh polynomial and nothing here mutates shared state.

#include <algorithm>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "monomial_order.hpp"
#include "rational.hpp"

namespace jetcalc {

inline Rational rational_pow(const Rational& base, unsigned exp) {
    Rational r(1);
    Rational b = base;
    while (exp > 0) {
        if (exp & 1u) r *= b;
        b *= b;
        exp >>= 1u;
    }
    return r;
}

class Polynomial {
public:
    using TermMap = std::map<Exps, Rational, CanonicalTermLess>;

    Polynomial() = default;

    static Polynomial zero(std::vector<std::string> vars, FieldSpec field) {
        Polynomial p;
        p.vars_ = std::move(vars);
        p.field_ = field;
        return p;
    }

    static Polynomial constant(std::vector<std::string> vars, FieldSpec field,
                               const Rational& c) {
        Polynomial p = zero(std::move(vars), field);
        p.add_term(Exps(p.vars_.size(), 0), c);
        return p;
    }

    static Polynomial variable(std::vector<std::string> vars, FieldSpec field,
                               std::size_t index) {
        Polynomial p = zero(std::move(vars), field);
        if (index >= p.vars_.size()) throw DomainError("variable index out of range");
        Exps e(p.vars_.size(), 0);
        e[index] = 1;
        p.add_term(e, Rational(1));
        return p;
    }

    static Polynomial monomial(std::vector<std::string> vars, FieldSpec field, Exps exps,
                               const Rational& c) {
        Polynomial p = zero(std::move(vars), field);
        if (exps.size() != p.vars_.size())
            throw DomainError("exponent vector length does not match variable count");
        p.add_term(std::move(exps), c);
        return p;
    }

    const std::vector<std::string>& variables() const { return vars_; }
    const FieldSpec& field() const { return field_; }
    const TermMap& terms() const { return terms_; }
    std::size_t num_vars() const { return vars_.size(); }
    bool is_zero() const { return terms_.empty(); }

    bool is_constant() const {
        return terms_.empty() ||
               (terms_.size() == 1 && total_degree(terms_.begin()->first) == 0);
    }

    Rational constant_value() const {
        if (terms_.empty()) return Rational(0);
        auto it = terms_.find(Exps(vars_.size(), 0));
        return it == terms_.end() ? Rational(0) : it->second;
    }

    long long degree() const {
        if (terms_.empty()) return -1;
        return total_degree(terms_.rbegin()->first);
    }

    // Adds c * x^exps, dropping the term if it cancels to zero.
    void add_term(Exps exps, const Rational& c) {
        Rational v = field_normalize(field_, c);
        if (v == 0) return;
        auto [it, inserted] = terms_.emplace(std::move(exps), v);
        if (!inserted) {
            it->second = field_normalize(field_, it->second + v);
            if (it->second == 0) terms_.erase(it);
        }
    }

    Polynomial operator-() const {
        Polynomial r = *this;
        for (auto& [e, c] : r.terms_) c = field_normalize(field_, -c);
        return r;
    }

    Polynomial& operator+=(const Polynomial& o) {
        check_compatible(o);
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }

    Polynomial& operator-=(const Polynomial& o) {
        check_compatible(o);
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        a.check_compatible(b);
        Polynomial r = zero(a.vars_, a.field_);
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) r.add_term(exps_add(ea, eb), ca * cb);
        return r;
    }

    Polynomial scaled(const Rational& c) const {
        Polynomial r = zero(vars_, field_);
        for (const auto& [e, cc] : terms_) r.add_term(e, cc * c);
        return r;
    }

    // Multiplies by c * x^shift in one pass.
    Polynomial scaled_shifted(const Rational& c, const Exps& shift) const {
        Polynomial r = zero(vars_, field_);
        for (const auto& [e, cc] : terms_) r.add_term(exps_add(e, shift), cc * c);
        return r;
    }

    Polynomial pow(unsigned n) const {
        Polynomial r = constant(vars_, field_, Rational(1));
        Polynomial b = *this;
        while (n > 0) {
            if (n & 1u) r = r * b;
            if (n >>= 1u) b = b * b;
        }
        return r;
    }

    Polynomial derivative(std::size_t var_index) const {
        if (var_index >= vars_.size()) throw DomainError("variable index out of range");
        Polynomial r = zero(vars_, field_);
        for (const auto& [e, c] : terms_) {
            if (e[var_index] == 0) continue;
            Exps d = e;
            d[var_index] -= 1;
            r.add_term(std::move(d), c * e[var_index]);
        }
        return r;
    }

    Rational eval(const std::vector<Rational>& point) const {
        if (point.size() != vars_.size())
            throw DomainError("evaluation point has wrong length");
        Rational acc(0);
        for (const auto& [e, c] : terms_) {
            Rational t = c;
            for (std::size_t j = 0; j < e.size(); ++j)
                if (e[j] > 0) t *= rational_pow(point[j], static_cast<unsigned>(e[j]));
            acc += t;
        }
        return field_normalize(field_, acc);
    }

    bool operator==(const Polynomial& o) const {
        return vars_ == o.vars_ && field_ == o.field_ && terms_ == o.terms_;
    }

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::ostringstream out;
        bool first = true;
        // Reverse map order = leading term first.
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            Rational c = it->second;
            bool negative = c < 0;
            if (first) {
                if (negative) out << "-";
            } else {
                out << (negative ? " - " : " + ");
            }
            if (negative) c = -c;
            std::string mono = monomial_string(it->first);
            if (mono.empty()) {
                out << rational_to_string(c);
            } else {
                if (c != 1) out << rational_to_string(c) << "*";
                out << mono;
            }
            first = false;
        }
        return out.str();
    }

private:
    void check_compatible(const Polynomial& o) const {
        if (vars_ != o.vars_) throw DomainError("polynomials have different variables");
        if (!(field_ == o.field_)) throw DomainError("polynomials have different fields");
    }

    std::string monomial_string(const Exps& e) const {
        std::string s;
        for (std::size_t j = 0; j < e.size(); ++j) {
            if (e[j] == 0) continue;
            if (!s.empty()) s += "*";
            s += vars_[j];
            if (e[j] > 1) s += "^" + std::to_string(e[j]);
        }
        return s;
    }

    std::vector<std::string> vars_;
    FieldSpec field_;
    TermMap terms_;
};

// Evaluates p after sending each variable to the given image polynomial.
// All images must live in one target ring; this is a ring homomorphism.
inline Polynomial substitute(const Polynomial& p, const std::vector<Polynomial>& images) {
    if (images.size() != p.num_vars())
        throw DomainError("substitute: expected one image per variable");
    for (const auto& img : images) {
        if (!(img.field() == p.field()))
            throw DomainError("substitute: image field does not match polynomial field");
        if (img.variables() != images.front().variables())
            throw DomainError("substitute: images live in different rings");
    }
    std::vector<std::string> tvars =
        images.empty() ? p.variables() : images.front().variables();
    Polynomial result = Polynomial::zero(tvars, p.field());
    // Power cache per source variable.
    std::vector<std::vector<Polynomial>> powers(p.num_vars());
    auto power_of = [&](std::size_t j, int e) -> const Polynomial& {
        auto& cache = powers[j];
        if (cache.empty()) cache.push_back(Polynomial::constant(tvars, p.field(), Rational(1)));
        while (static_cast<int>(cache.size()) <= e) cache.push_back(cache.back() * images[j]);
        return cache[static_cast<std::size_t>(e)];
    };
    for (const auto& [e, c] : p.terms()) {
        Polynomial term = Polynomial::constant(tvars, p.field(), c);
        for (std::size_t j = 0; j < e.size(); ++j)
            if (e[j] > 0) term = term * power_of(j, e[j]);
        result += term;
    }
    return result;
}

inline Polynomial substitute(const Polynomial& p,
                             const std::map<std::string, Polynomial>& images) {
    std::vector<Polynomial> vec;
    vec.reserve(p.num_vars());
    for (const auto& name : p.variables()) {
        auto it = images.find(name);
        if (it == images.end())
            throw DomainError("substitute: missing image for variable '" + name + "'");
        vec.push_back(it->second);
    }
    return substitute(p, vec);
}

// An ideal given by generators in a fixed ambient polynomial ring.
struct IdealPresentation {
    std::vector<std::string> vars;
    FieldSpec field;
    std::vector<Polynomial> generators;

    void validate() const {
        field.validate();
        for (const auto& g : generators) {
            if (g.variables() != vars)
                throw DomainError("ideal generator has wrong variable list");
            if (!(g.field() == field)) throw DomainError("ideal generator has wrong field");
        }
    }

    bool all_generators_zero() const {
        return std::all_of(generators.begin(), generators.end(),
                           [](const Polynomial& g) { return g.is_zero(); });
    }

    // Text form: a vars line, a char line, then one generator per line.
    std::string canonical_text() const {
        std::ostringstream out;
        out << "vars: ";
        for (std::size_t i = 0; i < vars.size(); ++i) out << (i ? "," : "") << vars[i];
        out << "\nchar: " << field.characteristic << "\n";
        for (const auto& g : generators) out << g.to_string() << "\n";
        return out.str();
    }
};

namespace detail {

inline Polynomial matrix_determinant(const std::vector<std::vector<Polynomial>>& m,
                                     const std::vector<std::string>& vars,
                                     const FieldSpec& field) {
    std::size_t k = m.size();
    if (k == 0) return Polynomial::constant(vars, field, Rational(1));
    if (k == 1) return m[0][0];
    Polynomial det = Polynomial::zero(vars, field);
    for (std::size_t j = 0; j < k; ++j) {
        if (m[0][j].is_zero()) continue;
        std::vector<std::vector<Polynomial>> minor;
        minor.reserve(k - 1);
        for (std::size_t r = 1; r < k; ++r) {
            std::vector<Polynomial> row;
            row.reserve(k - 1);
            for (std::size_t c = 0; c < k; ++c)
                if (c != j) row.push_back(m[r][c]);
            minor.push_back(std::move(row));
        }
        Polynomial cof = m[0][j] * matrix_determinant(minor, vars, field);
        if (j % 2 == 0)
            det += cof;
        else
            det -= cof;
    }
    return det;
}

inline void enumerate_combinations(std::size_t n, std::size_t k,
                                   std::vector<std::vector<std::size_t>>& out) {
    if (k == 0 || k > n) {
        if (k == 0) out.push_back({});
        return;
    }
    std::vector<std::size_t> combo(k);
    for (std::size_t i = 0; i < k; ++i) combo[i] = i;
    while (true) {
        out.push_back(combo);
        std::size_t i = k;
        while (i-- > 0) {
            if (combo[i] + (k - i) < n) {
                ++combo[i];
                for (std::size_t j = i + 1; j < k; ++j) combo[j] = combo[j - 1] + 1;
                break;
            }
            if (i == 0) return;
        }
    }
}

}  // namespace detail

// The ideal generated by the f_a together with all codim x codim minors of
// the Jacobian matrix (df_a/dx_j).  Minors are emitted in (row combination,
// column combination) lexicographic order; zero minors are kept so the
// output shape is predictable.
inline IdealPresentation jacobian_generators(const IdealPresentation& ideal,
                                             std::size_t codim) {
    ideal.validate();
    std::size_t r = ideal.generators.size();
    std::size_t n = ideal.vars.size();
    if (codim == 0) throw DomainError("jacobian_generators: codim must be positive");
    if (codim > r)
        throw DomainError("jacobian_generators: codim exceeds generator count");
    if (codim > n)
        throw DomainError("jacobian_generators: codim exceeds ambient dimension");

    std::vector<std::vector<Polynomial>> jac(r);
    for (std::size_t a = 0; a < r; ++a) {
        jac[a].reserve(n);
        for (std::size_t j = 0; j < n; ++j) jac[a].push_back(ideal.generators[a].derivative(j));
    }

    IdealPresentation out{ideal.vars, ideal.field, ideal.generators};
    std::vector<std::vector<std::size_t>> row_sets, col_sets;
    detail::enumerate_combinations(r, codim, row_sets);
    detail::enumerate_combinations(n, codim, col_sets);
    for (const auto& rows : row_sets) {
        for (const auto& cols : col_sets) {
            std::vector<std::vector<Polynomial>> sub;
            sub.reserve(codim);
            for (std::size_t a : rows) {
                std::vector<Polynomial> row;
                row.reserve(codim);
                for (std::size_t j : cols) row.push_back(jac[a][j]);
                sub.push_back(std::move(row));
            }
            out.generators.push_back(detail::matrix_determinant(sub, ideal.vars, ideal.field));
        }
    }
    return out;
}

}  // namespace jetcalc
