#pragma once

// Singularity invariants computed from jet-scheme dimensions and from
// resolution data: log canonical threshold estimates and closed forms,
// minimal log discrepancies, the box/fat-point growth invariants, fiber
// dimension recursions for homogeneous hypersurfaces, and the complete
// intersection verdicts.  Everything is exact rational arithmetic; +-inf
// appear only as explicit sentinels.

#include <atomic>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "groebner.hpp"
#include "jet.hpp"
#include "local_algebra.hpp"
#include "polynomial.hpp"
#include "rational.hpp"
#include "resolution.hpp"

namespace jetcalc {

struct InvariantReport {
    std::string quantity;
    ExtValue value;
    std::string method;  // jet-dimension | resolution-formula | closed-form |
                         // recursion | stratification
    std::string label;   // exact / bound qualifiers
    std::vector<std::pair<std::string, std::string>> inputs;
};

struct DimEntry {
    long long m;
    long long dim;
    Rational normalized;  // dim / (m+1)
};

struct DimensionSequence {
    int ambient_dim = 0;
    std::vector<DimEntry> entries;
};

// dim(J_{m-1})/m <= dim(J_{mp-1})/(mp): checked on every comparable pair
// of computed entries.
inline bool monotonicity_check(const DimensionSequence& seq) {
    for (std::size_t a = 0; a < seq.entries.size(); ++a)
        for (std::size_t b = 0; b < seq.entries.size(); ++b) {
            const auto& lo = seq.entries[a];
            const auto& hi = seq.entries[b];
            if (lo.m >= hi.m) continue;
            if ((hi.m + 1) % (lo.m + 1) != 0) continue;
            if (lo.normalized > hi.normalized) return false;
        }
    return true;
}

// Every jet-dimension result is checked against the dimension sandwich
// dim(X)*dim_k(A) <= dim(J_A(X)) <= N*dim_k(A); the counter lets test
// suites confirm the check actually ran.
inline std::atomic<std::size_t>& sandwich_checks_performed() {
    static std::atomic<std::size_t> count{0};
    return count;
}

inline void check_dimension_sandwich(long long result, std::size_t ambient_vars,
                                     int algebra_dim,
                                     std::optional<long long> declared_dim) {
    ++sandwich_checks_performed();
    if (result > static_cast<long long>(ambient_vars) * algebra_dim)
        throw InternalError("jet dimension exceeds N * dim_k(A)");
    if (result < 0) return;  // empty scheme: nothing below to check
    if (declared_dim && result < *declared_dim * algebra_dim)
        throw InternalError("jet dimension below dim(X) * dim_k(A)");
}

// dim J_A(X) through the equation generator and the Groebner engine.
inline long long jet_dimension(const IdealPresentation& ideal, const LocalAlgebra& algebra,
                               std::optional<long long> declared_dim = std::nullopt,
                               std::size_t budget = 200000) {
    JetSystem sys = generate_jet_equations(ideal, algebra);
    GroebnerOptions opt;
    opt.order = jet_dimension_order(ideal.vars.size(), sys.algebra_dim());
    opt.budget = budget;
    long long dim = krull_dimension(sys.as_ideal(), opt);
    check_dimension_sandwich(dim, ideal.vars.size(), algebra.dim(), declared_dim);
    return dim;
}

inline long long fiber_dimension(const JetSystem& sys, const IdealPresentation& center,
                                 std::size_t budget = 200000) {
    IdealPresentation fib = fiber_ideal(sys, center);
    GroebnerOptions opt;
    opt.order = jet_dimension_order(sys.ambient_vars(), sys.algebra_dim());
    opt.budget = budget;
    return krull_dimension(fib, opt);
}

// ---- log canonical threshold ------------------------------------------

// Closed form for a monomial x_1^a_1 ... x_n^a_n: min over positive
// exponents of 1/a_i.
inline Rational lct_monomial(const std::vector<long long>& exponents) {
    std::optional<Rational> best;
    for (long long a : exponents) {
        if (a < 0) throw DomainError("lct_monomial: exponents must be nonnegative");
        if (a == 0) continue;
        Rational v(1, a);
        if (!best || v < *best) best = v;
    }
    if (!best) throw DomainError("lct_monomial: all exponents are zero");
    return *best;
}

// Closed form for a diagonal x_1^a_1 + ... + x_n^a_n: min(1, sum 1/a_i).
inline Rational lct_diagonal(const std::vector<long long>& exponents) {
    if (exponents.empty()) throw DomainError("lct_diagonal: empty exponent list");
    Rational sum(0);
    for (long long a : exponents) {
        if (a < 1) throw DomainError("lct_diagonal: exponents must be >= 1");
        sum += Rational(1, a);
    }
    return std::min(Rational(1), sum);
}

struct LctEstimateResult {
    DimensionSequence sequence;
    ExtValue lct;
    bool certified = false;
    std::optional<std::pair<long long, long long>> certificate;  // (m, m')
    std::optional<long long> failed_at;  // budget gave out at this index
    InvariantReport report;
};

// Jet-dimension estimate of the log canonical threshold: computes
// dim J_m(W) for m <= m_max, takes the maximum of dim/(m+1), and reports
// n minus that maximum.  The result is labeled exact when the maximum is
// attained at an index m' that extends a divisibility pair m+1 | m'+1
// within the computed range (the attained maximum then sits on a
// monotone divisibility chain); otherwise it is an upper bound for lct.
inline LctEstimateResult lct_estimate(const IdealPresentation& ideal, long long m_max,
                                      std::size_t budget = 200000) {
    ideal.validate();
    if (m_max < 0) throw DomainError("lct_estimate: m_max must be >= 0");
    long long n = static_cast<long long>(ideal.vars.size());

    LctEstimateResult res;
    res.sequence.ambient_dim = static_cast<int>(n);
    res.report.quantity = "lct";
    res.report.method = "jet-dimension";

    if (ideal.all_generators_zero()) {
        res.lct = ExtValue::finite(Rational(0));
        res.certified = true;
        res.report.value = res.lct;
        res.report.label = "exact (zero ideal convention)";
        return res;
    }
    {
        GroebnerOptions opt;
        opt.budget = budget;
        if (buchberger(ideal, opt).is_unit_ideal()) {
            res.lct = ExtValue::plus_inf();
            res.certified = true;
            res.report.value = res.lct;
            res.report.label = "exact (unit ideal convention)";
            return res;
        }
    }

    for (long long m = 0; m <= m_max; ++m) {
        long long dim;
        try {
            dim = jet_dimension(ideal, truncation_algebra(static_cast<int>(m)),
                                std::nullopt, budget);
        } catch (const BudgetExhausted&) {
            res.failed_at = m;
            break;
        }
        res.sequence.entries.push_back({m, dim, Rational(dim, m + 1)});
    }
    if (res.sequence.entries.empty()) {
        res.lct = ExtValue::finite(Rational(n));
        res.report.value = res.lct;
        res.report.label = "no data (budget exhausted at m=0)";
        return res;
    }
    if (!monotonicity_check(res.sequence))
        throw InternalError("jet dimension sequence violates divisibility monotonicity");

    Rational vmax = res.sequence.entries.front().normalized;
    for (const auto& e : res.sequence.entries) vmax = std::max(vmax, e.normalized);
    res.lct = ExtValue::finite(Rational(n) - vmax);

    for (auto hi = res.sequence.entries.rbegin();
         hi != res.sequence.entries.rend() && !res.certified; ++hi) {
        if (hi->normalized != vmax) continue;
        for (long long m = hi->m - 1; m >= 1; --m) {
            if ((hi->m + 1) % (m + 1) == 0) {
                res.certified = true;
                res.certificate = {m, hi->m};
                break;
            }
        }
    }
    res.report.value = res.lct;
    res.report.label = res.certified ? "exact (maximum on a divisibility chain)"
                                     : "upper bound for lct";
    return res;
}

// ---- minimal log discrepancy ------------------------------------------

struct MldEstimateResult {
    std::vector<std::pair<long long, Rational>> v_sequence;  // (m, v_m)
    ExtValue mld;
    bool certified = false;  // true exactly when -inf was detected
    std::optional<long long> failed_at;
    InvariantReport report;
};

// v_m = (m+1)(n - q) - dim(J_m(W) over Z); any negative value certifies
// mld = -inf, otherwise the running minimum is an upper bound that equals
// the mld once m_max is large enough.
inline MldEstimateResult mld_estimate(const IdealPresentation& ideal,
                                      const IdealPresentation& center, const Rational& q,
                                      long long m_max, std::size_t budget = 200000) {
    ideal.validate();
    center.validate();
    long long n = static_cast<long long>(ideal.vars.size());
    if (n < 2) throw DomainError("mld_estimate: ambient dimension must be >= 2");
    if (q <= 0) throw DomainError("mld_estimate: q must be positive");
    if (center.vars != ideal.vars)
        throw DomainError("mld_estimate: center must live in the same ambient variables");
    if (center.generators.empty() || center.all_generators_zero())
        throw DomainError("mld_estimate: center ideal is zero (not a proper subset)");
    {
        GroebnerOptions opt;
        opt.budget = budget;
        if (buchberger(center, opt).is_unit_ideal())
            throw DomainError("mld_estimate: center is the unit ideal (empty center)");
    }

    if (ideal.generators.empty() || ideal.all_generators_zero())
        throw DomainError("mld_estimate: the ideal must be nonzero");

    MldEstimateResult res;
    res.report.quantity = "mld";
    res.report.method = "jet-dimension";
    std::optional<Rational> running_min;
    for (long long m = 0; m <= m_max; ++m) {
        long long dim;
        try {
            JetSystem sys =
                generate_jet_equations(ideal, truncation_algebra(static_cast<int>(m)));
            dim = fiber_dimension(sys, center, budget);
        } catch (const BudgetExhausted&) {
            res.failed_at = m;
            break;
        }
        if (dim < 0) continue;  // empty fiber contributes +inf
        Rational v = Rational(m + 1) * (Rational(n) - q) - Rational(dim);
        res.v_sequence.push_back({m, v});
        if (!running_min || v < *running_min) running_min = v;
        if (v < 0) break;  // certified -inf
    }
    if (running_min && *running_min < 0) {
        res.mld = ExtValue::minus_inf();
        res.certified = true;
        res.report.label = "exact (-inf certified by a negative value)";
    } else if (running_min) {
        res.mld = ExtValue::finite(*running_min);
        res.report.label = "upper bound; equals mld for m_max large enough";
    } else {
        res.mld = ExtValue::plus_inf();
        res.report.label = "no finite values computed (empty fibers)";
    }
    res.report.value = res.mld;
    return res;
}

// ---- growth invariants over embedding dimension 2 ----------------------

inline long long alpha_pq(const IdealPresentation& ideal, int p, int q,
                          std::size_t budget = 200000) {
    if (p < 1 || q < 1) throw DomainError("alpha_pq: p, q must be >= 1");
    return jet_dimension(ideal, box_algebra(p, q), std::nullopt, budget);
}

struct AlphaCell {
    int p, q;
    std::optional<long long> dim;  // empty when the budget ran out
    Rational normalized;
};

struct AlphaTable {
    std::vector<AlphaCell> cells;
    Rational sup;              // running max over computed cells
    bool monotonicity_ok = true;  // divisibility comparisons among cells
};

inline AlphaTable alpha_table(const IdealPresentation& ideal, int p_max, int q_max,
                              std::size_t budget = 200000) {
    if (p_max < 1 || q_max < 1) throw DomainError("alpha_table: bounds must be >= 1");
    AlphaTable table;
    std::map<std::pair<int, int>, Rational> normalized;
    bool have_sup = false;
    for (int p = 1; p <= p_max; ++p) {
        for (int q = 1; q <= q_max; ++q) {
            AlphaCell cell{p, q, std::nullopt, Rational(0)};
            try {
                long long d = alpha_pq(ideal, p, q, budget);
                cell.dim = d;
                cell.normalized = Rational(d, static_cast<long long>(p) * q);
                normalized[{p, q}] = cell.normalized;
                if (!have_sup || cell.normalized > table.sup) {
                    table.sup = cell.normalized;
                    have_sup = true;
                }
            } catch (const BudgetExhausted&) {
            }
            table.cells.push_back(std::move(cell));
        }
    }
    for (const auto& [pq1, v1] : normalized)
        for (const auto& [pq2, v2] : normalized) {
            auto [p1, q1] = pq1;
            auto [p2, q2] = pq2;
            bool comparable = (q1 == q2 && p2 % p1 == 0 && p2 > p1) ||
                              (p1 == p2 && q2 % q1 == 0 && q2 > q1);
            if (comparable && v1 > v2) table.monotonicity_ok = false;
        }
    return table;
}

inline long long beta_m(const IdealPresentation& ideal, int m, std::size_t budget = 200000) {
    if (m < 1) throw DomainError("beta_m: m must be >= 1");
    return jet_dimension(ideal, fat_point_algebra(2, m), std::nullopt, budget);
}

struct BetaEntry {
    int m;
    std::optional<long long> dim;
    Rational normalized;  // dim / (m(m+1)/2)
};

inline std::vector<BetaEntry> beta_table(const IdealPresentation& ideal, int m_max,
                                         std::size_t budget = 200000) {
    if (m_max < 1) throw DomainError("beta_table: m_max must be >= 1");
    std::vector<BetaEntry> out;
    for (int m = 1; m <= m_max; ++m) {
        BetaEntry e{m, std::nullopt, Rational(0)};
        try {
            long long d = beta_m(ideal, m, budget);
            e.dim = d;
            e.normalized = Rational(d, static_cast<long long>(m) * (m + 1) / 2);
        } catch (const BudgetExhausted&) {
        }
        out.push_back(std::move(e));
    }
    return out;
}

// Stratification formula for a monomial hypersurface x^a: each vanishing
// profile nu with sum a_i nu_i >= m is a stratum of dimension
// n*m(m+1)/2 - sum nu_i(nu_i+1)/2; beta_m is the maximum over strata.
inline long long beta_monomial(const std::vector<long long>& a, int m) {
    if (m < 1) throw DomainError("beta_monomial: m must be >= 1");
    bool nonzero = false;
    for (long long ai : a) {
        if (ai < 0) throw DomainError("beta_monomial: exponents must be nonnegative");
        if (ai > 0) nonzero = true;
    }
    if (!nonzero || a.empty()) throw DomainError("beta_monomial: exponents are all zero");
    std::size_t n = a.size();
    long long base = static_cast<long long>(n) * m * (m + 1) / 2;
    long long best = -1;
    std::vector<long long> nu(n, 0);
    while (true) {
        long long weighted = 0, cost = 0;
        for (std::size_t i = 0; i < n; ++i) {
            weighted += a[i] * nu[i];
            cost += nu[i] * (nu[i] + 1) / 2;
        }
        if (weighted >= m) best = std::max(best, base - cost);
        std::size_t i = 0;
        while (i < n && nu[i] == m) nu[i++] = 0;
        if (i == n) break;
        ++nu[i];
    }
    if (best < 0) throw InternalError("beta_monomial: no feasible vanishing profile");
    return best;
}

inline Rational beta_monomial_limit(const std::vector<long long>& a) {
    long long sumsq = 0;
    bool nonzero = false;
    for (long long ai : a) {
        if (ai < 0) throw DomainError("beta_monomial_limit: exponents must be nonnegative");
        sumsq += ai * ai;
        if (ai > 0) nonzero = true;
    }
    if (!nonzero || a.empty())
        throw DomainError("beta_monomial_limit: exponents are all zero");
    return Rational(static_cast<long long>(a.size())) - Rational(1, sumsq);
}

struct GammaEntry {
    std::string algebra;
    int algebra_dim = 0;
    std::optional<long long> dim;
    Rational normalized;
};

struct GammaResult {
    std::vector<GammaEntry> entries;
    Rational lower_bound;
    InvariantReport report;
};

// Running max of dim J_A(X)/dim_k(A) over a finite list of embedding
// dimension <= 2 algebras; a lower bound for the supremum.
inline GammaResult gamma_estimate(const IdealPresentation& ideal,
                                  const std::vector<LocalAlgebra>& algebras,
                                  std::size_t budget = 200000) {
    if (algebras.empty()) throw DomainError("gamma_estimate: empty algebra list");
    GammaResult res;
    bool have = false;
    for (const auto& alg : algebras) {
        if (alg.embdim() > 2)
            throw DomainError("gamma_estimate: algebra " + alg.describe() +
                              " has embedding dimension > 2");
        GammaEntry e{alg.describe(), alg.dim(), std::nullopt, Rational(0)};
        try {
            long long d = jet_dimension(ideal, alg, std::nullopt, budget);
            e.dim = d;
            e.normalized = Rational(d, alg.dim());
            if (!have || e.normalized > res.lower_bound) {
                res.lower_bound = e.normalized;
                have = true;
            }
        } catch (const BudgetExhausted&) {
        }
        res.entries.push_back(std::move(e));
    }
    if (!have) throw BudgetExhausted(budget);
    res.report = {"gamma", ExtValue::finite(res.lower_bound), "jet-dimension",
                  "lower bound over the supplied algebras", {}};
    return res;
}

// ---- homogeneous hypersurface recursion --------------------------------

struct HomogFiberResult {
    std::vector<long long> fiber_dims;  // F_m = dim of the fiber over 0
    std::vector<long long> jet_dims;    // D_m = dim J_m
    bool pure_dimensional = false;      // d <= n
    bool irreducible = false;           // d < n
};

// Degree-d hypersurface in A^n with an isolated singularity at 0:
// the fiber over 0 is full A^{mn} below the degree, and above it factors
// through a lower jet scheme; jets are the larger of the smooth-part
// closure and the fiber.
inline HomogFiberResult homog_fiber_dims(int n, int d, int m_max) {
    if (n < 2) throw DomainError("homog_fiber_dims: n must be >= 2");
    if (d < 1) throw DomainError("homog_fiber_dims: d must be >= 1");
    if (m_max < 0) throw DomainError("homog_fiber_dims: m_max must be >= 0");
    HomogFiberResult res;
    for (int m = 0; m <= m_max; ++m) {
        long long f;
        if (m <= d - 1)
            f = static_cast<long long>(m) * n;
        else
            f = static_cast<long long>(n) * (d - 1) + res.jet_dims[static_cast<std::size_t>(m - d)];
        long long dim = std::max<long long>(static_cast<long long>(m + 1) * (n - 1), f);
        res.fiber_dims.push_back(f);
        res.jet_dims.push_back(dim);
    }
    res.pure_dimensional = d <= n;
    res.irreducible = d < n;
    return res;
}

// ---- complete intersection verdicts ------------------------------------

struct LciVerdict {
    bool pure_dimensional = false;
    bool irreducible = false;
    long long jet_dim = 0;
    long long singular_fiber_dim = 0;
    long long expected_dim = 0;  // dim_k(A) * dim(X)
};

// For X a complete intersection of declared dimension: J_A(X) is
// pure-dimensional exactly when its dimension is dim_k(A)*dim(X) (the
// verdict is dimension-level: a lower-dimensional embedded component
// cannot be excluded without decomposition), and irreducible exactly when
// the fiber over the singular locus has strictly smaller dimension.
inline LciVerdict lci_jet_check(const IdealPresentation& ideal, long long declared_dim,
                                const LocalAlgebra& algebra, std::size_t budget = 200000) {
    ideal.validate();
    std::size_t n_amb = ideal.vars.size();
    if (declared_dim < 0 || declared_dim > static_cast<long long>(n_amb))
        throw DomainError("lci_jet_check: declared dimension out of range");
    std::size_t codim = n_amb - static_cast<std::size_t>(declared_dim);
    if (ideal.generators.size() != codim)
        throw DomainError("lci_jet_check: not a complete intersection presentation "
                          "(generator count must equal the codimension)");

    JetSystem sys = generate_jet_equations(ideal, algebra);
    GroebnerOptions opt;
    opt.order = jet_dimension_order(n_amb, sys.algebra_dim());
    opt.budget = budget;

    LciVerdict v;
    v.expected_dim = static_cast<long long>(algebra.dim()) * declared_dim;
    v.jet_dim = krull_dimension(sys.as_ideal(), opt);
    check_dimension_sandwich(v.jet_dim, n_amb, algebra.dim(), declared_dim);
    v.pure_dimensional = v.jet_dim == v.expected_dim;

    IdealPresentation singular = jacobian_generators(ideal, codim);
    v.singular_fiber_dim = krull_dimension(fiber_ideal(sys, singular), opt);
    v.irreducible = v.singular_fiber_dim < v.expected_dim;
    return v;
}

// ---- iterated jets of homogeneous hypersurfaces -------------------------

struct Prop54Result {
    std::vector<Rational> rhs;  // the bound for j = 1..j_max
    BigInt limit;               // d^r
    bool necessary_condition_holds = false;  // d^r <= n
    std::string verdict;
};

// Necessary condition for pure-dimensional r-iterated jet schemes of a
// degree-d hypersurface in A^n: n >= d * prod_{i<r} (jd+i)/(j+i) for all
// j, with limit d^r.
inline Prop54Result prop54_check(long long n, long long d, int r, int j_max) {
    if (d < 1) throw DomainError("prop54_check: d must be >= 1");
    if (r < 2) throw DomainError("prop54_check: r must be >= 2");
    if (j_max < 1) throw DomainError("prop54_check: j_max must be >= 1");
    Prop54Result res;
    for (long long j = 1; j <= j_max; ++j) {
        Rational v(d);
        for (int i = 1; i <= r - 1; ++i) v *= Rational(j * d + i, j + i);
        if (!res.rhs.empty() && v < res.rhs.back())
            throw InternalError("prop54_check: bound sequence is not nondecreasing");
        res.rhs.push_back(std::move(v));
    }
    res.limit = boost::multiprecision::pow(BigInt(d), static_cast<unsigned>(r));
    res.necessary_condition_holds = res.limit <= n;
    res.verdict = res.necessary_condition_holds
                      ? "necessary condition d^r <= n holds"
                      : "fails d^r <= n: the r-iterated jet schemes cannot all be "
                        "pure-dimensional";
    return res;
}

}  // namespace jetcalc
