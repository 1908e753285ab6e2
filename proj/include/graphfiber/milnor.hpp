#pragma once

// The rational monodromy decomposition of H_1 of the Milnor fiber of a
// graphic arrangement:
//
//   H_1(F, Q) = (Q[t]/(t-1))^(n-1) (+) sum over divisors d of n of
//               (Q[t]/Phi_d)^(b_d)
//
// For rank 1 the fiber is a point; for rank 2 the closed form gives
// b_d = n-2 for every divisor d != 1; for rank >= 3 the only possibly
// nonzero exponent beyond d = 1 is b_3 = beta_3, with beta_2 = beta_5 = 0
// re-verified at runtime (a failure is a bug, not bad input).

#include <map>
#include <string>
#include <vector>

#include "graphfiber/aomoto.hpp"
#include "graphfiber/arrangement.hpp"
#include "graphfiber/errors.hpp"
#include "graphfiber/graph.hpp"

namespace graphfiber {

enum class ExceptionalClass { NotExceptional, D3, D4 };

inline const char* to_string(ExceptionalClass c) {
    switch (c) {
        case ExceptionalClass::D3: return "D3";
        case ExceptionalClass::D4: return "D4";
        default: return "NotExceptional";
    }
}

// The five exceptional patterns, one representative per switching/relabeling
// class: D_3 (double-edge triangle); a negative triangle with loops at all
// three vertices; a loop with two double edges and an opposite simple edge;
// the all-negative-triangle K_4; and D_4 (double-edge K_4).
inline std::vector<SignedGraph> exceptional_patterns() {
    auto dbl = [](int i, int j) { return std::vector<SignedEdge>{{i, j, -1}, {i, j, 1}}; };
    std::vector<SignedGraph> out;
    { // D_3
        std::vector<SignedEdge> e;
        for (auto [i, j] : {std::pair{1, 2}, {1, 3}, {2, 3}})
            for (auto& x : dbl(i, j)) e.push_back(x);
        out.push_back(make_graph(3, {}, e));
    }
    // negative triangle, loops everywhere
    out.push_back(make_graph(3, {1, 2, 3}, {{1, 2, -1}, {1, 3, -1}, {2, 3, -1}}));
    { // loop + two incident double edges + simple opposite edge
        std::vector<SignedEdge> e = {{2, 3, -1}};
        for (auto& x : dbl(1, 2)) e.push_back(x);
        for (auto& x : dbl(1, 3)) e.push_back(x);
        out.push_back(make_graph(3, {1}, e));
    }
    // K_4, all edges simple, every triangle negative
    out.push_back(make_graph(4, {}, {{1, 2, -1}, {1, 3, -1}, {1, 4, -1}, {2, 3, -1}, {2, 4, -1}, {3, 4, -1}}));
    { // D_4
        std::vector<SignedEdge> e;
        for (int i = 1; i <= 4; ++i)
            for (int j = i + 1; j <= 4; ++j)
                for (auto& x : dbl(i, j)) e.push_back(x);
        out.push_back(make_graph(4, {}, e));
    }
    return out;
}

inline ExceptionalClass classify_exceptional(const SignedGraph& g, bool cross_check = false) {
    Arrangement a = build_arrangement(g);
    if (a.rank < 3) throw input_error("classify_exceptional requires rank >= 3");
    int beta3 = beta_p(a, 3);

    if (cross_check) {
        SignedGraph canon = canonical_form(compact(g));
        bool matches_pattern = false;
        for (const auto& pat : exceptional_patterns())
            if (canonical_form(pat) == canon) { matches_pattern = true; break; }
        if (matches_pattern != (beta3 != 0))
            throw theorem_violation("exceptional-pattern cross check disagrees with beta_3");
    }

    if (beta3 == 0) return ExceptionalClass::NotExceptional;
    if (beta3 != 1)
        throw theorem_violation("beta_3 = " + std::to_string(beta3) + " outside {0,1} at rank >= 3");
    if (a.n() == 6) return ExceptionalClass::D3;
    if (a.n() == 12) return ExceptionalClass::D4;
    throw theorem_violation("beta_3 = 1 with n = " + std::to_string(a.n()) + ", expected 6 or 12");
}

struct CyclotomicDecomposition {
    long long n = 0;
    int rank = 0;
    std::map<int, long long> exponents; // divisor d -> b_d; d > 1 kept only when nonzero

    long long exponent(int d) const {
        auto it = exponents.find(d);
        return it == exponents.end() ? 0 : it->second;
    }
};

// Core computation on the arrangement (rank <= 2 closed forms hold for any
// central arrangement; the rank >= 3 branch encodes the graphic theorems).
inline CyclotomicDecomposition h1_decomposition(const Arrangement& a) {
    CyclotomicDecomposition out;
    out.n = a.n();
    out.rank = a.rank;
    if (a.rank == 1) { // the fiber is a point
        out.exponents[1] = 0;
        return out;
    }
    out.exponents[1] = a.n() - 1;
    if (a.rank == 2) {
        for (int d = 2; d <= a.n(); ++d)
            if (a.n() % d == 0 && a.n() - 2 > 0) out.exponents[d] = a.n() - 2;
        return out;
    }
    int beta2 = beta_p(a, 2);
    int beta3 = beta_p(a, 3);
    int beta5 = beta_p(a, 5);
    if (beta2 != 0) throw theorem_violation("beta_2 != 0 at rank >= 3");
    if (beta5 != 0) throw theorem_violation("beta_5 != 0 at rank >= 3");
    if (a.n() % 3 != 0) {
        if (beta3 != 0) throw theorem_violation("beta_3 != 0 with n not divisible by 3");
    } else if (beta3 > 0) {
        out.exponents[3] = beta3;
    }
    return out;
}

inline CyclotomicDecomposition h1_decomposition(const SignedGraph& g) {
    return h1_decomposition(build_arrangement(g));
}

// b_1(M, C_rho) for the rational equimonodromical character of denominator d.
inline long long twisted_betti_equimonodromic(const SignedGraph& g, int d) {
    Arrangement a = build_arrangement(g);
    if (d == 1) throw input_error("twisted Betti number requires d != 1");
    if (d < 1 || a.n() % d != 0) throw input_error("twisted Betti number requires d | n");
    return h1_decomposition(a).exponent(d);
}

struct SharpnessReport {
    long long beta = 0; // modular upper bound beta_p
    long long b = 0;    // twisted Betti number b_{1p}
    bool equal = false;
};

// The modular bound is an equality for graphic arrangements at every prime
// dividing n; an inequality here is a bug sentinel.
inline SharpnessReport sharpness_report(const SignedGraph& g, long long p) {
    Arrangement a = build_arrangement(g);
    if (!is_prime(p)) throw input_error("sharpness_report requires a prime");
    if (a.n() % p != 0) throw input_error("sharpness_report requires p | n");
    SharpnessReport r;
    r.beta = beta_p(a, p);
    r.b = twisted_betti_equimonodromic(g, (int)p);
    r.equal = (r.beta == r.b);
    if (!r.equal)
        throw theorem_violation("modular bound is strict at p = " + std::to_string(p) +
                                ": beta = " + std::to_string(r.beta) + ", b = " + std::to_string(r.b));
    return r;
}

// Formula string mirroring the four-block shape used for rank >= 3 reports.
inline std::string decomposition_formula(const CyclotomicDecomposition& dec) {
    auto block = [&](int d) {
        return std::string("Φ") + std::to_string(d) + "^" + std::to_string(dec.exponent(d));
    };
    std::string s = "(t-1)^" + std::to_string(dec.exponent(1));
    if (dec.rank >= 3) {
        s += " ⊕ " + block(2) + " ⊕ " + block(4) + " ⊕ " + block(3) + " ⊕ " + block(5);
        return s;
    }
    for (const auto& [d, e] : dec.exponents)
        if (d > 1) s += " ⊕ " + block(d);
    return s;
}

} // namespace graphfiber
