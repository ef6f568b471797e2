#pragma once

// Simple-normal-crossings resolution data and the invariants computable
// from it.  A divisor record carries a = its coefficient in the pullback
// of the ideal and k = its coefficient in the relative canonical class;
// faces list the divisor subsets with nonempty intersection.  Faces are
// completed downward and all singletons are inserted, but no geometry is
// ever inferred beyond that.

#include <climits>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "errors.hpp"
#include "rational.hpp"

namespace jetcalc {

struct Divisor {
    std::string id;
    long long a = 0;  // ord_E of the ideal
    long long k = 0;  // ord_E of the relative canonical class
    bool center_in_Z = false;
};

struct ResolutionData {
    int ambient_dim = 0;
    std::vector<Divisor> divisors;
    std::vector<std::vector<std::size_t>> faces;  // sorted index sets

    void validate_and_complete() {
        if (ambient_dim < 1) throw DomainError("resolution data: ambient_dim must be >= 1");
        std::set<std::string> ids;
        for (const auto& d : divisors) {
            if (d.id.empty()) throw DomainError("resolution data: divisor with empty id");
            if (!ids.insert(d.id).second)
                throw DomainError("resolution data: duplicate divisor id '" + d.id + "'");
            if (d.a < 0 || d.k < 0)
                throw DomainError("resolution data: coefficients must be nonnegative");
        }
        std::set<std::vector<std::size_t>> closed;
        for (std::size_t i = 0; i < divisors.size(); ++i) closed.insert({i});
        for (auto face : faces) {
            std::sort(face.begin(), face.end());
            face.erase(std::unique(face.begin(), face.end()), face.end());
            for (std::size_t idx : face)
                if (idx >= divisors.size())
                    throw DomainError("resolution data: face refers to unknown divisor");
            // Downward closure: every nonempty subset of a face is a face.
            std::size_t subsets = std::size_t{1} << face.size();
            for (std::size_t mask = 1; mask < subsets; ++mask) {
                std::vector<std::size_t> sub;
                for (std::size_t b = 0; b < face.size(); ++b)
                    if (mask & (std::size_t{1} << b)) sub.push_back(face[b]);
                closed.insert(std::move(sub));
            }
        }
        faces.assign(closed.begin(), closed.end());
    }

    std::size_t index_of(const std::string& id) const {
        for (std::size_t i = 0; i < divisors.size(); ++i)
            if (divisors[i].id == id) return i;
        throw DomainError("resolution data: unknown divisor id '" + id + "'");
    }

    static ResolutionData from_json(const nlohmann::json& j) {
        ResolutionData r;
        if (!j.contains("ambient_dim") || !j["ambient_dim"].is_number_integer())
            throw DomainError("resolution data: missing integer field 'ambient_dim'");
        r.ambient_dim = j["ambient_dim"].get<int>();
        if (!j.contains("divisors") || !j["divisors"].is_array())
            throw DomainError("resolution data: missing array field 'divisors'");
        for (const auto& dj : j["divisors"]) {
            Divisor d;
            if (!dj.contains("id") || !dj.contains("a") || !dj.contains("k"))
                throw DomainError("resolution data: divisor needs id, a, k");
            d.id = dj["id"].get<std::string>();
            d.a = dj["a"].get<long long>();
            d.k = dj["k"].get<long long>();
            d.center_in_Z = dj.value("center_in_Z", false);
            r.divisors.push_back(std::move(d));
        }
        if (j.contains("faces")) {
            for (const auto& fj : j["faces"]) {
                std::vector<std::size_t> face;
                for (const auto& idj : fj) face.push_back(r.index_of(idj.get<std::string>()));
                r.faces.push_back(std::move(face));
            }
        }
        r.validate_and_complete();
        return r;
    }
};

// lct = min over divisors with a >= 1 of (k+1)/a.
inline Rational lct_from_resolution(const ResolutionData& r) {
    std::optional<Rational> best;
    for (const auto& d : r.divisors) {
        if (d.a < 1) continue;
        Rational v(d.k + 1, d.a);
        if (!best || v < *best) best = v;
    }
    if (!best)
        throw DomainError("lct_from_resolution: no divisor with positive coefficient a");
    return *best;
}

inline constexpr long long kCodimInfinity = LLONG_MAX / 4;

// Codimension of the order->=m contact locus: over each face, an unbounded
// integer covering problem min sum (k_i+1) v_i subject to sum a_i v_i >= m,
// solved by dp[w] = min_i dp[w - a_i] + (k_i+1) in O(|face| * m); then the
// minimum over faces.  Empty optional means infeasible (+infinity).
inline std::optional<long long> contact_codim(const ResolutionData& r, long long m) {
    if (m < 1) throw DomainError("contact_codim: m must be >= 1");
    if (m > 100000000) throw DomainError("contact_codim: m is unreasonably large");
    long long best = kCodimInfinity;
    std::vector<long long> dp(static_cast<std::size_t>(m) + 1);
    for (const auto& face : r.faces) {
        bool feasible = false;
        for (std::size_t i : face)
            if (r.divisors[i].a >= 1) feasible = true;
        if (!feasible) continue;
        dp[0] = 0;
        for (long long w = 1; w <= m; ++w) {
            long long v = kCodimInfinity;
            for (std::size_t i : face) {
                const Divisor& d = r.divisors[i];
                if (d.a < 1) continue;
                long long prev = dp[static_cast<std::size_t>(std::max(0LL, w - d.a))];
                if (prev < kCodimInfinity) v = std::min(v, prev + d.k + 1);
            }
            dp[static_cast<std::size_t>(w)] = v;
        }
        best = std::min(best, dp[static_cast<std::size_t>(m)]);
    }
    if (best >= kCodimInfinity) return std::nullopt;
    return best;
}

namespace detail {

inline void contact_enum(const ResolutionData& r, const std::set<std::uint64_t>& face_masks,
                         std::size_t idx, long long remaining, std::uint64_t support,
                         long long cost, long long& best) {
    if (cost >= best) return;
    if (idx == r.divisors.size()) {
        if (remaining > 0) return;
        if (support != 0 && !face_masks.count(support)) return;
        best = cost;
        return;
    }
    const Divisor& d = r.divisors[idx];
    // v = 0 branch first.
    contact_enum(r, face_masks, idx + 1, remaining, support, cost, best);
    if (d.a < 1) return;  // positive v with a = 0 only adds cost
    long long cap = (std::max(remaining, 0LL) + d.a - 1) / d.a;
    for (long long v = 1; v <= cap; ++v)
        contact_enum(r, face_masks, idx + 1, remaining - v * d.a,
                     support | (std::uint64_t{1} << idx), cost + v * (d.k + 1), best);
}

}  // namespace detail

// Exhaustive oracle for contact_codim.  Dominated assignments (lowering
// some v_i keeps the demand met and shrinks the support, which stays a
// face by downward closure) are skipped; every minimal candidate is
// visited.
inline std::optional<long long> contact_codim_bruteforce(const ResolutionData& r,
                                                         long long m) {
    if (m < 1) throw DomainError("contact_codim_bruteforce: m must be >= 1");
    if (m > 60 || r.divisors.size() > 6)
        throw DomainError("contact_codim_bruteforce: limited to m <= 60 and 6 divisors");
    std::set<std::uint64_t> face_masks;
    for (const auto& face : r.faces) {
        std::uint64_t mask = 0;
        for (std::size_t i : face) mask |= (std::uint64_t{1} << i);
        face_masks.insert(mask);
    }
    long long best = kCodimInfinity;
    detail::contact_enum(r, face_masks, 0, m, 0, 0, best);
    if (best >= kCodimInfinity) return std::nullopt;
    return best;
}

// mld over a center Z: min over divisors with center in Z of
// (k+1) - q * a; minus infinity as soon as that minimum is negative.
inline ExtValue mld_from_resolution(const ResolutionData& r, const Rational& q) {
    if (r.ambient_dim < 2)
        throw DomainError("mld_from_resolution: ambient dimension must be >= 2");
    if (q <= 0) throw DomainError("mld_from_resolution: q must be positive");
    std::optional<Rational> best;
    for (const auto& d : r.divisors) {
        if (!d.center_in_Z) continue;
        Rational v = Rational(d.k + 1) - q * Rational(d.a);
        if (!best || v < *best) best = v;
    }
    if (!best)
        throw DomainError("mld_from_resolution: no divisor has its center inside Z");
    if (*best < 0) return ExtValue::minus_inf();
    return ExtValue::finite(*best);
}

}  // namespace jetcalc
