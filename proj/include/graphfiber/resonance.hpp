#pragma once

// Nonresonance and admissibility over the rationals, and the vanishing
// certificates they yield for the equimonodromical twisted Betti numbers.
//
// A rational weight w is nonresonant when Sigma_X w is never a positive
// integer over dense flats X, with Sigma_C w not a negative integer at the
// center; the partial (k-)variant checks dense flats of rank <= k+1 and
// requires Sigma_C w = 0 exactly.

#include <array>
#include <optional>
#include <set>
#include <vector>

#include "graphfiber/aomoto.hpp"
#include "graphfiber/arrangement.hpp"
#include "graphfiber/errors.hpp"
#include "graphfiber/fields.hpp"
#include "graphfiber/graph.hpp"

namespace graphfiber {

inline bool is_nonresonant(const Arrangement& a, const Weights<RationalField>& w) {
    RationalField q;
    if ((int)w.size() != a.n()) throw input_error("weight vector length does not match arrangement");
    for (const Flat& x : full_lattice(a)) {
        if (!is_dense(a, x)) continue;
        if (sigma(a, q, w, x).is_positive_integer()) return false;
    }
    return !sigma(a, q, w, center(a)).is_negative_integer();
}

inline bool is_k_nonresonant(const Arrangement& a, const Weights<RationalField>& w, int k) {
    RationalField q;
    if (k < 1) throw input_error("k-nonresonance requires k >= 1");
    if ((int)w.size() != a.n()) throw input_error("weight vector length does not match arrangement");
    if (!sigma(a, q, w, center(a)).is_zero()) return false;
    int bound = std::min(k + 1, a.rank);
    for (const Flat& x : flats(a, bound)) {
        if (!is_dense(a, x)) continue;
        if (sigma(a, q, w, x).is_positive_integer()) return false;
    }
    return true;
}

// Certificate for b_{qd}(A) = 0, q <= k: a hyperplane K such that d divides
// no multiplicity in the m-list taken away from K. The certified weight is
// 1/d with an integral spike -n/d at K.
inline std::optional<int> vanishing_certificate(const Arrangement& a, int d, int k) {
    if (a.rank < 3) throw input_error("vanishing_certificate requires rank >= 3");
    if (k < 1 || k >= a.rank - 1) throw input_error("vanishing_certificate requires 1 <= k < rank-1");
    if (d == 1) throw input_error("vanishing_certificate requires d != 1");
    if (d < 1 || a.n() % d != 0) throw input_error("vanishing_certificate requires d | n");
    for (int cand = 0; cand < a.n(); ++cand) {
        bool ok = true;
        for (int m : m_list(a, k + 1, cand))
            if (m % d == 0) { ok = false; break; }
        if (ok) return cand;
    }
    return std::nullopt;
}

inline std::set<int> certified_vanishing_divisors(const Arrangement& a) {
    if (a.rank < 3) throw input_error("certified_vanishing_divisors requires rank >= 3");
    std::set<int> out;
    for (int d = 2; d <= a.n(); ++d) {
        if (a.n() % d != 0) continue;
        if (vanishing_certificate(a, d, 1).has_value()) out.insert(d);
    }
    return out;
}

struct AdmissibilitySearchResult {
    bool found = false;
    std::vector<long long> alpha; // 1/d + alpha is k-nonresonant when found

    explicit operator bool() const { return found; }
};

namespace detail {

struct DenseFlatCache {
    std::vector<std::vector<int>> members; // dense flats of rank <= k+1
    long long n = 0;

    DenseFlatCache(const Arrangement& a, int k) : n(a.n()) {
        for (const Flat& x : flats(a, std::min(k + 1, a.rank)))
            if (is_dense(a, x)) members.push_back(x.members);
    }

    // w_H = 1/d + alpha_H; center sum is zero by construction of the search
    bool k_nonresonant(const std::vector<long long>& alpha, long long d) const {
        for (const auto& mem : members) {
            long long s = 0;
            for (int h : mem) s += alpha[h];
            // Sigma_X w = m/d + s: a positive integer iff d | m and m/d + s >= 1
            long long m = (long long)mem.size();
            if (m % d == 0 && m / d + s >= 1) return false;
        }
        return true;
    }
};

} // namespace detail

// Bounded, one-sided search for an integral shift alpha making 1/d + alpha
// k-nonresonant. Searches the box [-bound, bound]^n in ascending
// lexicographic order (the box is symmetric, so this covers the 1/d - alpha
// convention as well), then the single-spike vectors +-(n/d) e_K. A
// NotFound result is not a proof of inadmissibility.
inline AdmissibilitySearchResult admissibility_search(const Arrangement& a, int d, int k, int bound) {
    if (d < 2) throw input_error("admissibility_search requires d >= 2");
    if (bound < 1) throw input_error("admissibility_search requires bound >= 1");
    const int n = a.n();
    if (n % d != 0) return {}; // Sigma_C(1/d + alpha) = n/d + (integer) can never vanish
    const long long target = -(long long)(n / d); // required sum of alpha

    detail::DenseFlatCache cache(a, k);
    auto verify_and_pack = [&](const std::vector<long long>& alpha) -> AdmissibilitySearchResult {
        Weights<RationalField> w(n);
        for (int h = 0; h < n; ++h) w[h] = rat_add(Rat(1, d), Rat(alpha[h]));
        if (!is_k_nonresonant(a, w, k))
            throw theorem_violation("admissibility candidate failed the nonresonance recheck");
        return {true, alpha};
    };

    std::vector<long long> alpha(n, 0);
    AdmissibilitySearchResult found;
    // depth-first over entries, pruning on the reachable sum range
    auto dfs = [&](auto&& self, int idx, long long sum) -> bool {
        if (idx == n) {
            if (sum != target) return false;
            return cache.k_nonresonant(alpha, d);
        }
        long long rest = (long long)(n - idx - 1) * bound;
        for (long long v = -bound; v <= bound; ++v) {
            long long s = sum + v;
            if (s + rest < target || s - rest > target) continue;
            alpha[idx] = v;
            if (self(self, idx + 1, s)) return true;
        }
        alpha[idx] = 0;
        return false;
    };
    if (dfs(dfs, 0, 0)) return verify_and_pack(alpha);

    for (long long spike : {-(long long)(n / d), (long long)(n / d)}) {
        for (int h = 0; h < n; ++h) {
            std::vector<long long> cand(n, 0);
            cand[h] = spike;
            long long s = spike;
            if (s != target) continue;
            if (cache.k_nonresonant(cand, d)) return verify_and_pack(cand);
        }
    }
    return {};
}

// b_3(D_v) for v in {3, 4}, by the characteristic-zero route: the weight
// 1/3 + alpha with the paired integral shift (a on 12/34, b on 13/24,
// c on 23/14, a+b+c = -1) is 1-nonresonant, so beta1 over Q computes the
// twisted Betti number directly.
inline int deligne_b3_coxeter_d(int v, std::array<long long, 3> abc = {1, 1, -3}) {
    if (v != 3 && v != 4) throw input_error("deligne_b3_coxeter_d supports v = 3 or 4 only");
    auto [pa, pb, pc] = abc;
    if (pa + pb + pc != -1) throw input_error("deligne_b3_coxeter_d requires a + b + c = -1");

    std::vector<SignedEdge> edges;
    for (int i = 1; i <= v; ++i)
        for (int j = i + 1; j <= v; ++j) {
            edges.push_back({i, j, -1});
            edges.push_back({i, j, 1});
        }
    SignedGraph dv = make_graph(v, {}, std::move(edges));
    Arrangement a = build_arrangement(dv);

    auto label_of = [&](int i, int j) -> long long {
        // pairs and their complements share a label: {1,2}/{3,4} -> a,
        // {1,3}/{2,4} -> b, {1,4}/{2,3} -> c
        if ((i == 1 && j == 2) || (i == 3 && j == 4)) return pa;
        if ((i == 1 && j == 3) || (i == 2 && j == 4)) return pb;
        return pc;
    };
    Weights<RationalField> w(a.n());
    for (int h = 0; h < a.n(); ++h) {
        const OriginTag& t = a.hyperplanes[h].origin;
        w[h] = rat_add(Rat(1, 3), Rat(label_of(t.i, t.j)));
    }
    if (!is_k_nonresonant(a, w, 1))
        throw theorem_violation("the paired shift failed 1-nonresonance on D_" + std::to_string(v));
    RationalField q;
    return beta1(a, q, w);
}

} // namespace graphfiber
