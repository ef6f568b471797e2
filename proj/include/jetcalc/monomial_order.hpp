#pragma once

#include <cstddef>
#include <numeric>
#include <string>
#include <vector>

#include "errors.hpp"

namespace jetcalc {

// Exponent vector of a monomial; length always equals the variable count.
using Exps = std::vector<int>;

inline long long total_degree(const Exps& e) {
    return std::accumulate(e.begin(), e.end(), 0LL);
}

inline bool divides(const Exps& a, const Exps& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

inline Exps exps_lcm(const Exps& a, const Exps& b) {
    Exps r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
    return r;
}

inline Exps exps_add(const Exps& a, const Exps& b) {
    Exps r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline Exps exps_sub(const Exps& a, const Exps& b) {
    Exps r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

// True when the supports are disjoint, i.e. lcm(a,b) = a*b.
inline bool exps_coprime(const Exps& a, const Exps& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > 0 && b[i] > 0) return false;
    return true;
}

// Graded reverse lexicographic: higher total degree wins; ties are broken
// by the last position where the vectors differ, smaller exponent winning.
inline bool degrevlex_less(const Exps& a, const Exps& b) {
    long long da = total_degree(a), db = total_degree(b);
    if (da != db) return da < db;
    for (std::size_t i = a.size(); i-- > 0;)
        if (a[i] != b[i]) return a[i] > b[i];
    return false;
}

inline bool lex_less(const Exps& a, const Exps& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return a[i] < b[i];
    return false;
}

// Canonical storage order for polynomial term maps (degrevlex in the
// natural variable order).  Printing iterates this in reverse, so the
// leading term under the default order comes first.
struct CanonicalTermLess {
    bool operator()(const Exps& a, const Exps& b) const { return degrevlex_less(a, b); }
};

enum class OrderKind { degrevlex, lex };

// A monomial order: degrevlex or lex, optionally with a permuted variable
// significance.  var_order lists variable indices from most significant to
// least; empty means the natural order.
struct MonomialOrder {
    OrderKind kind = OrderKind::degrevlex;
    std::vector<int> var_order;

    static MonomialOrder degrevlex() { return {OrderKind::degrevlex, {}}; }
    static MonomialOrder lex() { return {OrderKind::lex, {}}; }

    std::string name() const {
        std::string s = kind == OrderKind::degrevlex ? "degrevlex" : "lex";
        if (!var_order.empty()) {
            s += "[";
            for (std::size_t i = 0; i < var_order.size(); ++i)
                s += (i ? "," : "") + std::to_string(var_order[i]);
            s += "]";
        }
        return s;
    }

    bool less(const Exps& a, const Exps& b) const {
        if (var_order.empty())
            return kind == OrderKind::degrevlex ? degrevlex_less(a, b) : lex_less(a, b);
        if (var_order.size() != a.size())
            throw DomainError("monomial order permutation has wrong length");
        Exps pa(a.size()), pb(b.size());
        for (std::size_t i = 0; i < var_order.size(); ++i) {
            pa[i] = a[static_cast<std::size_t>(var_order[i])];
            pb[i] = b[static_cast<std::size_t>(var_order[i])];
        }
        return kind == OrderKind::degrevlex ? degrevlex_less(pa, pb) : lex_less(pa, pb);
    }
};

}  // namespace jetcalc
