#pragma once

// Buchberger's algorithm over exact fields, with the normal selection
// strategy (smallest lcm first), Gebauer-Moller pair pruning (the eager
// form of Buchberger's coprimality and chain criteria), and fraction-free
// integer arithmetic with content removal over QQ to tame coefficient
// growth.  Output bases are reduced (pairwise indivisible leading terms,
// fully reduced tails, monic) and deterministic for fixed inputs.
//
// Every processed critical pair counts against an explicit budget;
// exceeding it raises BudgetExhausted rather than returning a wrong answer.
//
// Krull dimension of the quotient ring comes from the leading-term ideal:
// it is the largest number of variables spanning no leading-term support,
// computed as (#vars - minimum hitting set of the supports).

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "errors.hpp"
#include "monomial_order.hpp"
#include "polynomial.hpp"
#include "rational.hpp"

namespace jetcalc {

struct GroebnerOptions {
    MonomialOrder order = MonomialOrder::degrevlex();
    std::size_t budget = 200000;  // pair reductions
    bool record_traces = false;
    // When false the returned basis is minimal and monic but tails are not
    // autoreduced; leading terms are identical either way.  Dimension
    // queries use this to skip work they do not need.
    bool reduce_tails = true;
};

struct GroebnerBasis {
    std::vector<Polynomial> generators;  // reduced basis, sorted by leading term
    MonomialOrder order;
    FieldSpec field;
    std::vector<std::string> vars;
    // traces[g][k] expresses generators[g] as sum_k traces[g][k] * input[k];
    // empty unless requested.
    std::vector<std::vector<Polynomial>> traces;
    std::size_t steps_used = 0;

    bool is_unit_ideal() const {
        return generators.size() == 1 && generators[0].is_constant() &&
               !generators[0].is_zero();
    }
};

namespace detail {

inline std::pair<Exps, Rational> leading_term(const Polynomial& p, const MonomialOrder& order) {
    if (p.is_zero()) throw InternalError("leading term of zero polynomial");
    auto it = p.terms().begin();
    Exps best = it->first;
    Rational coeff = it->second;
    for (++it; it != p.terms().end(); ++it) {
        if (order.less(best, it->first)) {
            best = it->first;
            coeff = it->second;
        }
    }
    return {best, coeff};
}

struct StepCounter {
    std::size_t budget;
    std::size_t used = 0;
    void tick() {
        if (++used > budget) throw BudgetExhausted(budget);
    }
};

// ---- flat term-array engine -------------------------------------------

// Monomial comparison on raw exponent spans.
struct SpanOrder {
    OrderKind kind;
    std::vector<int> perm;  // empty = natural variable order
    std::size_t n;

    explicit SpanOrder(const MonomialOrder& order, std::size_t nvars)
        : kind(order.kind), perm(order.var_order.begin(), order.var_order.end()), n(nvars) {
        if (!perm.empty() && perm.size() != nvars)
            throw DomainError("monomial order permutation has wrong length");
    }

    // <0 when a comes before b in descending term order (a bigger), 0 equal.
    int cmp_desc(const int* a, const int* b) const {
        if (perm.empty()) return raw_cmp(a, b, nullptr);
        return raw_cmp(a, b, perm.data());
    }

private:
    int raw_cmp(const int* a, const int* b, const int* pm) const {
        auto at = [&](const int* v, std::size_t i) {
            return pm ? v[static_cast<std::size_t>(pm[i])] : v[i];
        };
        if (kind == OrderKind::degrevlex) {
            long long da = 0, db = 0;
            for (std::size_t i = 0; i < n; ++i) {
                da += a[i];
                db += b[i];
            }
            if (da != db) return da > db ? -1 : 1;
            for (std::size_t i = n; i-- > 0;) {
                int ai = at(a, i), bi = at(b, i);
                if (ai != bi) return ai < bi ? -1 : 1;
            }
            return 0;
        }
        for (std::size_t i = 0; i < n; ++i) {
            int ai = at(a, i), bi = at(b, i);
            if (ai != bi) return ai > bi ? -1 : 1;
        }
        return 0;
    }
};

inline bool span_divides(const int* a, const int* b, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i)
        if (a[i] > b[i]) return false;
    return true;
}

// Polynomial as parallel term arrays, descending in the active order.
struct GPoly {
    std::size_t n = 0;
    std::vector<int> ex;  // term-major exponents, size terms()*n
    std::vector<BigInt> co;

    std::size_t terms() const { return co.size(); }
    bool zero() const { return co.empty(); }
    const int* mon(std::size_t t) const { return ex.data() + t * n; }

    void push(const int* m, BigInt c) {
        ex.insert(ex.end(), m, m + n);
        co.push_back(std::move(c));
    }
};

// r = a * x^shift_p * p  -  b * x^shift_q * q, merged in descending order.
// p is consumed: its coefficients are multiplied in place and moved into
// the result, which keeps big-integer allocations off the common path.
// Over GF(p) coefficients are reduced and zeros dropped; over QQ exact.
inline GPoly gp_combine(const SpanOrder& ord, const FieldSpec& field, GPoly&& p,
                        std::size_t p_from, const BigInt& a, const int* shift_p,
                        const GPoly& q, const BigInt& b, const int* shift_q) {
    std::size_t n = ord.n;
    GPoly r;
    r.n = n;
    r.ex.reserve((p.terms() - p_from + q.terms()) * n);
    r.co.reserve(p.terms() - p_from + q.terms());
    std::vector<int> ma(n), mb(n);
    std::uint32_t ch = field.characteristic;
    bool scale_p = a != 1;

    auto reduce_inplace = [&](BigInt& v) {
        if (ch) {
            v %= ch;
            if (v < 0) v += ch;
        }
    };
    auto take_p = [&](std::size_t i) {
        BigInt v = std::move(p.co[i]);
        if (scale_p) v *= a;
        reduce_inplace(v);
        return v;
    };

    std::size_t i = p_from, j = 0;
    const int* A = nullptr;
    const int* B = nullptr;
    auto load_a = [&] {
        const int* m = p.mon(i);
        if (!shift_p) { A = m; return; }
        for (std::size_t k = 0; k < n; ++k) ma[k] = m[k] + shift_p[k];
        A = ma.data();
    };
    auto load_b = [&] {
        const int* m = q.mon(j);
        if (!shift_q) { B = m; return; }
        for (std::size_t k = 0; k < n; ++k) mb[k] = m[k] + shift_q[k];
        B = mb.data();
    };
    if (i < p.terms()) load_a();
    if (j < q.terms()) load_b();
    while (i < p.terms() && j < q.terms()) {
        int c = ord.cmp_desc(A, B);
        if (c < 0) {
            BigInt v = take_p(i);
            if (v != 0) r.push(A, std::move(v));
            if (++i < p.terms()) load_a();
        } else if (c > 0) {
            BigInt v = -(b * q.co[j]);
            reduce_inplace(v);
            if (v != 0) r.push(B, std::move(v));
            if (++j < q.terms()) load_b();
        } else {
            BigInt v = take_p(i);
            v -= b * q.co[j];
            reduce_inplace(v);
            if (v != 0) r.push(A, std::move(v));
            if (++i < p.terms()) load_a();
            if (++j < q.terms()) load_b();
        }
    }
    for (; i < p.terms(); ++i) {
        BigInt v = take_p(i);
        if (v == 0) continue;
        const int* m = p.mon(i);
        if (shift_p) {
            for (std::size_t k = 0; k < n; ++k) ma[k] = m[k] + shift_p[k];
            m = ma.data();
        }
        r.push(m, std::move(v));
    }
    for (; j < q.terms(); ++j) {
        BigInt v = -(b * q.co[j]);
        reduce_inplace(v);
        if (v == 0) continue;
        const int* m = q.mon(j);
        if (shift_q) {
            for (std::size_t k = 0; k < n; ++k) mb[k] = m[k] + shift_q[k];
            m = mb.data();
        }
        r.push(m, std::move(v));
    }
    return r;
}

// Primitive form over QQ (divide by content, positive lead); monic over
// GF(p).  Returns the applied scalar so trace bookkeeping can follow.
inline Rational gp_normalize(GPoly& g, const FieldSpec& field) {
    if (g.zero()) return Rational(1);
    if (!field.is_rational_field()) {
        BigInt inv = detail::mod_inverse(g.co[0], field.characteristic);
        for (auto& c : g.co) c = detail::mod_reduce(c * inv, field.characteristic);
        return Rational(inv);
    }
    BigInt content = 0;
    for (const auto& c : g.co) {
        content = boost::multiprecision::gcd(content, c);
        if (content == 1) break;
    }
    if (g.co[0] < 0) content = -content;
    if (content != 1)
        for (auto& c : g.co) c /= content;
    return Rational(1, content);
}

struct GBElem {
    GPoly p;
    std::vector<Polynomial> trace;

    const int* lm() const { return p.mon(0); }
    const BigInt& lc() const { return p.co[0]; }
    long long lm_degree() const {
        long long d = 0;
        for (std::size_t k = 0; k < p.n; ++k) d += p.mon(0)[k];
        return d;
    }
};

// Full fraction-free division: repeatedly cancels the leading reducible
// term against the first divisor whose leading monomial divides it, moving
// irreducible leading terms to the remainder.  The remainder is rescaled
// together with the work polynomial, so the result is an exact scalar
// multiple of the normal form.  trace_work, when given, follows the same
// operations in rational arithmetic.  skip_index excludes one divisor
// (used by autoreduction).
inline GPoly ff_divide(const SpanOrder& ord, const FieldSpec& field, GPoly work,
                       const std::vector<GBElem>& basis,
                       std::vector<Polynomial>* trace_work,
                       std::size_t skip_index = static_cast<std::size_t>(-1)) {
    std::size_t n = ord.n;
    GPoly rem;
    rem.n = n;
    std::vector<int> shift(n);
    std::size_t cursor = 0;
    // Accumulated fraction-free rescale since the last content strip; a
    // strip is worth its cost only once this has grown substantially.
    BigInt scale_accum = 1;

    while (cursor < work.terms()) {
        const int* e = work.mon(cursor);
        const BigInt& c = work.co[cursor];
        std::size_t k = 0;
        for (; k < basis.size(); ++k) {
            if (k == skip_index || basis[k].p.zero()) continue;
            if (span_divides(basis[k].lm(), e, n)) break;
        }
        if (k == basis.size()) {
            rem.push(e, c);
            ++cursor;
            continue;
        }
        const GBElem& g = basis[k];
        for (std::size_t t = 0; t < n; ++t) shift[t] = e[t] - g.lm()[t];
        BigInt a, b;
        if (field.is_rational_field()) {
            BigInt d = boost::multiprecision::gcd(c, g.lc());
            a = g.lc() / d;
            b = c / d;
            if (a < 0) {
                a = -a;
                b = -b;
            }
        } else {
            a = 1;
            b = detail::mod_reduce(c * detail::mod_inverse(g.lc(), field.characteristic),
                                   field.characteristic);
        }
        if (a != 1) {
            for (auto& rc : rem.co) rc *= a;
            scale_accum *= a;
            if (trace_work)
                for (auto& t : *trace_work) t = t.scaled(Rational(a));
        }
        if (trace_work) {
            Exps sh(shift.begin(), shift.end());
            for (std::size_t t = 0; t < trace_work->size(); ++t)
                (*trace_work)[t] -= g.trace[t].scaled_shifted(Rational(b), sh);
        }
        work = gp_combine(ord, field, std::move(work), cursor, a, nullptr, g.p, b,
                          shift.data());
        cursor = 0;
        if (!trace_work && boost::multiprecision::msb(scale_accum) > 64) {
            BigInt content = 0;
            for (std::size_t t = 0; t < work.terms() && content != 1; ++t)
                content = boost::multiprecision::gcd(content, work.co[t]);
            for (std::size_t t = 0; t < rem.terms() && content != 1; ++t)
                content = boost::multiprecision::gcd(content, rem.co[t]);
            if (content > 1) {
                for (auto& v : work.co) v /= content;
                for (auto& v : rem.co) v /= content;
            }
            scale_accum = 1;
        }
    }
    return rem;
}

inline GPoly gp_from_polynomial(const Polynomial& p, const SpanOrder& ord,
                                const FieldSpec& field, Rational* factor_out) {
    struct Entry {
        const Exps* e;
        const Rational* c;
    };
    std::vector<Entry> entries;
    entries.reserve(p.terms().size());
    for (const auto& [e, c] : p.terms()) entries.push_back({&e, &c});
    std::sort(entries.begin(), entries.end(), [&](const Entry& x, const Entry& y) {
        return ord.cmp_desc(x.e->data(), y.e->data()) < 0;
    });

    GPoly g;
    g.n = ord.n;
    Rational factor(1);
    if (field.is_rational_field()) {
        BigInt den_lcm = 1, num_gcd = 0;
        for (const auto& en : entries) {
            den_lcm = boost::multiprecision::lcm(den_lcm, denominator(*en.c));
            num_gcd = boost::multiprecision::gcd(num_gcd, numerator(*en.c));
        }
        if (!entries.empty()) {
            factor = Rational(den_lcm, num_gcd);
            if (*entries.front().c * factor < 0) factor = -factor;
        }
    }
    for (const auto& en : entries) {
        Rational v = *en.c * factor;
        if (!field.is_rational_field()) v = field_normalize(field, v);
        if (v == 0) continue;
        g.push(en.e->data(), numerator(v));
    }
    if (factor_out) *factor_out = factor;
    return g;
}

inline Polynomial gp_to_polynomial(const GPoly& g, const std::vector<std::string>& vars,
                                   const FieldSpec& field, const Rational& scale) {
    Polynomial p = Polynomial::zero(vars, field);
    for (std::size_t t = 0; t < g.terms(); ++t) {
        Exps e(g.mon(t), g.mon(t) + g.n);
        p.add_term(std::move(e), Rational(g.co[t]) * scale);
    }
    return p;
}

struct CriticalPair {
    std::size_t i, j;
    Exps lcm;
    long long degree;
};

// The classic map-based full division; used on the small-scale paths
// (normal forms, membership, basis verification).
struct WorkPoly {
    Polynomial p;
    Exps lm;
    Rational lc;
};

inline void refresh_leading(WorkPoly& w, const MonomialOrder& order) {
    auto [lm, lc] = leading_term(w.p, order);
    w.lm = std::move(lm);
    w.lc = std::move(lc);
}

inline Polynomial divide_full(const Polynomial& input, const std::vector<WorkPoly>& divisors,
                              const MonomialOrder& order, const FieldSpec& field,
                              StepCounter& steps) {
    Polynomial work = input;
    Polynomial remainder = Polynomial::zero(input.variables(), input.field());
    while (!work.is_zero()) {
        auto [e, c] = leading_term(work, order);
        bool reduced = false;
        for (const auto& g : divisors) {
            if (g.p.is_zero() || !divides(g.lm, e)) continue;
            steps.tick();
            Rational q = field.is_rational_field()
                             ? Rational(c / g.lc)
                             : field_normalize(field, c * field_inverse(field, g.lc));
            work -= g.p.scaled_shifted(q, exps_sub(e, g.lm));
            reduced = true;
            break;
        }
        if (!reduced) {
            remainder.add_term(e, c);
            work -= Polynomial::monomial(work.variables(), field, e, c);
        }
    }
    return remainder;
}

}  // namespace detail

inline GroebnerBasis buchberger(const IdealPresentation& ideal,
                                const GroebnerOptions& options = {}) {
    ideal.validate();
    const MonomialOrder& order = options.order;
    const FieldSpec field = ideal.field;
    const std::size_t nvars = ideal.vars.size();
    detail::SpanOrder ord(order, nvars);
    detail::StepCounter steps{options.budget};

    std::vector<detail::GBElem> basis;
    std::size_t input_count = ideal.generators.size();
    auto zero_trace = [&] {
        return options.record_traces
                   ? std::vector<Polynomial>(input_count,
                                             Polynomial::zero(ideal.vars, field))
                   : std::vector<Polynomial>();
    };

    std::vector<detail::CriticalPair> pairs;

    // Gebauer-Moller update: prune old pairs the new leading term subsumes
    // (chain criterion), filter new pairs by strict lcm divisibility, keep
    // one pair per lcm class, and drop classes containing a coprime pair.
    auto update_pairs = [&](std::size_t t) {
        const int* lm_t = basis[t].lm();
        auto lcm_with = [&](std::size_t i) {
            Exps l(nvars);
            const int* lm_i = basis[i].lm();
            for (std::size_t k = 0; k < nvars; ++k) l[k] = std::max(lm_i[k], lm_t[k]);
            return l;
        };
        for (std::size_t k = 0; k < pairs.size();) {
            const auto& pr = pairs[k];
            if (detail::span_divides(lm_t, pr.lcm.data(), nvars) &&
                lcm_with(pr.i) != pr.lcm && lcm_with(pr.j) != pr.lcm) {
                pairs[k] = std::move(pairs.back());
                pairs.pop_back();
            } else {
                ++k;
            }
        }
        struct Cand {
            std::size_t i;
            Exps lcm;
            bool coprime;
        };
        std::vector<Cand> cands;
        cands.reserve(t);
        for (std::size_t i = 0; i < t; ++i) {
            if (basis[i].p.zero()) continue;
            bool coprime = true;
            const int* lm_i = basis[i].lm();
            for (std::size_t k = 0; k < nvars; ++k)
                if (lm_i[k] > 0 && lm_t[k] > 0) {
                    coprime = false;
                    break;
                }
            cands.push_back({i, lcm_with(i), coprime});
        }
        std::vector<char> keep(cands.size(), 1);
        for (std::size_t a = 0; a < cands.size(); ++a) {
            for (std::size_t b = 0; b < cands.size(); ++b) {
                if (b == a) continue;
                if (cands[b].lcm != cands[a].lcm && divides(cands[b].lcm, cands[a].lcm)) {
                    keep[a] = 0;
                    break;
                }
            }
        }
        for (std::size_t a = 0; a < cands.size(); ++a) {
            if (!keep[a]) continue;
            bool class_coprime = cands[a].coprime;
            bool representative = true;
            for (std::size_t b = 0; b < cands.size(); ++b) {
                if (b == a || !keep[b] || cands[b].lcm != cands[a].lcm) continue;
                if (cands[b].coprime) class_coprime = true;
                if (b < a) representative = false;
            }
            if (representative && !class_coprime)
                pairs.push_back({cands[a].i, t, cands[a].lcm, total_degree(cands[a].lcm)});
        }
    };

    bool unit_found = false;
    for (std::size_t k = 0; k < input_count; ++k) {
        const Polynomial& g = ideal.generators[k];
        if (g.is_zero()) continue;
        Rational factor;
        detail::GBElem el{detail::gp_from_polynomial(g, ord, field, &factor), zero_trace()};
        if (options.record_traces)
            el.trace[k] = Polynomial::constant(ideal.vars, field, factor);
        if (el.lm_degree() == 0) unit_found = true;
        basis.push_back(std::move(el));
        update_pairs(basis.size() - 1);
    }

    while (!pairs.empty() && !unit_found) {
        // Normal strategy: smallest lcm degree, then smallest lcm in the
        // order, then lowest indices.
        std::size_t best = 0;
        for (std::size_t k = 1; k < pairs.size(); ++k) {
            const auto& a = pairs[k];
            const auto& b = pairs[best];
            if (a.degree != b.degree) {
                if (a.degree < b.degree) best = k;
                continue;
            }
            if (a.lcm != b.lcm) {
                if (ord.cmp_desc(a.lcm.data(), b.lcm.data()) > 0) best = k;
                continue;
            }
            if (std::tie(a.i, a.j) < std::tie(b.i, b.j)) best = k;
        }
        detail::CriticalPair pr = pairs[best];
        pairs[best] = std::move(pairs.back());
        pairs.pop_back();
        steps.tick();

        const detail::GBElem& f = basis[pr.i];
        const detail::GBElem& g = basis[pr.j];

        Exps shift_f = exps_sub(pr.lcm, Exps(f.lm(), f.lm() + nvars));
        Exps shift_g = exps_sub(pr.lcm, Exps(g.lm(), g.lm() + nvars));
        BigInt a, b;
        if (field.is_rational_field()) {
            BigInt d = boost::multiprecision::gcd(f.lc(), g.lc());
            a = g.lc() / d;
            b = f.lc() / d;
        } else {
            a = detail::mod_inverse(f.lc(), field.characteristic);
            b = detail::mod_inverse(g.lc(), field.characteristic);
        }
        detail::GPoly spoly = detail::gp_combine(ord, field, detail::GPoly(f.p), 0, a,
                                                 shift_f.data(), g.p, b, shift_g.data());

        std::vector<Polynomial> trace_work;
        if (options.record_traces) {
            trace_work.assign(input_count, Polynomial::zero(ideal.vars, field));
            for (std::size_t t = 0; t < input_count; ++t)
                trace_work[t] = f.trace[t].scaled_shifted(Rational(a), shift_f) -
                                g.trace[t].scaled_shifted(Rational(b), shift_g);
        }

        detail::GPoly nf = detail::ff_divide(ord, field, std::move(spoly), basis,
                                             options.record_traces ? &trace_work : nullptr);
        if (nf.zero()) continue;

        detail::GBElem el{std::move(nf), {}};
        Rational factor = detail::gp_normalize(el.p, field);
        if (options.record_traces) {
            el.trace = std::move(trace_work);
            for (auto& t : el.trace) t = t.scaled(factor);
        }
        if (el.lm_degree() == 0) unit_found = true;
        basis.push_back(std::move(el));
        update_pairs(basis.size() - 1);
    }

    GroebnerBasis out;
    out.order = order;
    out.field = field;
    out.vars = ideal.vars;
    out.steps_used = steps.used;

    if (basis.empty()) return out;  // zero ideal

    if (unit_found) {
        auto it = std::find_if(basis.begin(), basis.end(), [](const detail::GBElem& w) {
            return !w.p.zero() && w.lm_degree() == 0;
        });
        out.generators.push_back(Polynomial::constant(ideal.vars, field, Rational(1)));
        if (options.record_traces) {
            Rational inv = field.is_rational_field() ? Rational(1) / Rational(it->p.co[0])
                                                     : field_inverse(field, Rational(it->p.co[0]));
            std::vector<Polynomial> tr;
            tr.reserve(input_count);
            for (const auto& t : it->trace) tr.push_back(t.scaled(inv));
            out.traces.push_back(std::move(tr));
        }
        out.steps_used = steps.used;
        return out;
    }

    // Minimalize: sort by leading term ascending, drop anything whose
    // leading term an earlier survivor divides.
    std::vector<std::size_t> idx(basis.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(), [&](std::size_t x, std::size_t y) {
        int c = ord.cmp_desc(basis[x].lm(), basis[y].lm());
        if (c != 0) return c > 0;  // ascending
        return x < y;
    });
    std::vector<detail::GBElem> minimal;
    for (std::size_t i : idx) {
        bool redundant =
            std::any_of(minimal.begin(), minimal.end(), [&](const detail::GBElem& h) {
                return detail::span_divides(h.lm(), basis[i].lm(), nvars);
            });
        if (!redundant) minimal.push_back(std::move(basis[i]));
    }

    // Autoreduce tails (unless skipped), then make monic.  The trace is
    // rescaled in lockstep with the polynomial so "generator = sum of
    // trace * input" stays exact.
    for (std::size_t k = 0; k < minimal.size(); ++k) {
        std::vector<Polynomial> trace_work;
        if (options.record_traces) trace_work = minimal[k].trace;

        detail::GPoly nf =
            options.reduce_tails
                ? detail::ff_divide(ord, field, minimal[k].p, minimal,
                                    options.record_traces ? &trace_work : nullptr, k)
                : std::move(minimal[k].p);
        Rational lead(nf.co[0]);
        Rational inv = field.is_rational_field() ? Rational(1) / lead
                                                 : field_inverse(field, lead);
        out.generators.push_back(detail::gp_to_polynomial(nf, ideal.vars, field, inv));
        if (options.record_traces) {
            for (auto& t : trace_work) t = t.scaled(inv);
            out.traces.push_back(std::move(trace_work));
        }
    }
    out.steps_used = steps.used;
    return out;
}

// Normal form of p modulo a computed basis.
inline Polynomial normal_form(const Polynomial& p, const GroebnerBasis& basis,
                              std::size_t budget = 1000000) {
    if (p.variables() != basis.vars || !(p.field() == basis.field))
        throw DomainError("normal_form: polynomial ring mismatch");
    std::vector<detail::WorkPoly> divisors;
    divisors.reserve(basis.generators.size());
    for (const auto& g : basis.generators) {
        detail::WorkPoly w{g, {}, {}};
        detail::refresh_leading(w, basis.order);
        divisors.push_back(std::move(w));
    }
    detail::StepCounter steps{budget};
    return detail::divide_full(p, divisors, basis.order, basis.field, steps);
}

inline bool ideal_membership(const Polynomial& p, const GroebnerBasis& basis) {
    if (p.is_zero()) return true;
    return normal_form(p, basis).is_zero();
}

// Test utility: re-checks the defining property (all s-polynomials reduce
// to zero) without any pair criteria.
inline bool is_groebner_basis(const GroebnerBasis& basis, std::size_t budget = 2000000) {
    std::vector<detail::WorkPoly> ws;
    for (const auto& g : basis.generators) {
        if (g.is_zero()) continue;
        detail::WorkPoly w{g, {}, {}};
        detail::refresh_leading(w, basis.order);
        ws.push_back(std::move(w));
    }
    detail::StepCounter steps{budget};
    for (std::size_t i = 0; i < ws.size(); ++i)
        for (std::size_t j = i + 1; j < ws.size(); ++j) {
            Exps l = exps_lcm(ws[i].lm, ws[j].lm);
            Polynomial s =
                ws[i].p.scaled_shifted(field_inverse(basis.field, ws[i].lc),
                                       exps_sub(l, ws[i].lm)) -
                ws[j].p.scaled_shifted(field_inverse(basis.field, ws[j].lc),
                                       exps_sub(l, ws[j].lm));
            if (!detail::divide_full(s, ws, basis.order, basis.field, steps).is_zero())
                return false;
        }
    return true;
}

// ---- dimension of a monomial ideal ----------------------------------

namespace detail {

inline void hitting_set_dfs(const std::vector<std::uint64_t>& supports, int count, int& best) {
    if (count >= best) return;
    if (supports.empty()) {
        best = count;
        return;
    }
    // Branch on the support with the fewest variables.
    std::size_t pick = 0;
    int pick_bits = 65;
    for (std::size_t k = 0; k < supports.size(); ++k) {
        int bits = 0;
        for (std::uint64_t m = supports[k]; m; m &= m - 1) ++bits;
        if (bits < pick_bits) {
            pick_bits = bits;
            pick = k;
        }
    }
    for (std::uint64_t m = supports[pick]; m; m &= m - 1) {
        std::uint64_t v = m & ~(m - 1);
        std::vector<std::uint64_t> rest;
        rest.reserve(supports.size());
        for (std::uint64_t s : supports)
            if (!(s & v)) rest.push_back(s);
        hitting_set_dfs(rest, count + 1, best);
    }
}

}  // namespace detail

// Dimension of k[x_1..x_n]/M for the monomial ideal M generated by the
// given supports: n minus the smallest variable set meeting every support.
inline long long monomial_dimension_from_supports(std::vector<std::uint64_t> supports,
                                                  std::size_t nvars) {
    for (std::uint64_t s : supports)
        if (s == 0) return -1;  // constant leading term: unit ideal
    // Keep only minimal supports.
    std::sort(supports.begin(), supports.end());
    supports.erase(std::unique(supports.begin(), supports.end()), supports.end());
    std::vector<std::uint64_t> minimal;
    for (std::uint64_t s : supports) {
        bool dominated = std::any_of(minimal.begin(), minimal.end(),
                                     [&](std::uint64_t t) { return (t & ~s) == 0; });
        if (!dominated) minimal.push_back(s);
    }
    // Taking every variable is always a hitting set, so this bound is tight
    // when the search cannot improve it.
    int best = static_cast<int>(nvars);
    detail::hitting_set_dfs(minimal, 0, best);
    return static_cast<long long>(nvars) - best;
}

// Krull dimension of the quotient by the ideal: -1 for the unit ideal,
// otherwise the combinatorial dimension of the leading-term ideal.
inline long long krull_dimension(const IdealPresentation& ideal,
                                 const GroebnerOptions& options = {}) {
    if (ideal.vars.size() > 63)
        throw DomainError("krull_dimension supports at most 63 variables");
    GroebnerOptions opts = options;
    opts.reduce_tails = false;  // only leading terms matter here
    GroebnerBasis basis = buchberger(ideal, opts);
    if (basis.is_unit_ideal()) return -1;
    std::vector<std::uint64_t> supports;
    supports.reserve(basis.generators.size());
    for (const auto& g : basis.generators) {
        auto [lm, lc] = detail::leading_term(g, options.order);
        std::uint64_t mask = 0;
        for (std::size_t v = 0; v < lm.size(); ++v)
            if (lm[v] > 0) mask |= (std::uint64_t{1} << v);
        supports.push_back(mask);
    }
    return monomial_dimension_from_supports(std::move(supports), ideal.vars.size());
}

}  // namespace jetcalc
