#pragma once

// Degree-1 cohomology of the Aomoto complex (A*, mu_w) of a central
// arrangement over an exact field. Three independent routes:
//
//   beta1            flat-local kernel conditions, one block per rank-2 flat:
//                    (Sigma_X w) eta_H - (Sigma_X eta) w_H = 0 for H in X.
//                    For w = 1 over F_p this is exactly: Sigma_X eta = 0 when
//                    p | m_X, and eta constant on X otherwise.
//   os2_matrix_beta  the explicit matrix A^1 -> A^2 in the anchored basis
//                    {a_min(X) a_H}, reducing products by the degree-2
//                    relation a_H a_K = a_min a_K - a_min a_H inside X.
//   brute_force_beta_p  enumerates all p^n weight vectors and counts the
//                    ones satisfying the per-flat conditions verbatim.
//
// The three must agree; the acceptance suite enforces it.

#include <string>
#include <vector>

#include "graphfiber/arrangement.hpp"
#include "graphfiber/errors.hpp"
#include "graphfiber/fields.hpp"
#include "graphfiber/linalg.hpp"

namespace graphfiber {

template <class F>
using Weights = std::vector<typename F::Elem>;

template <class F>
typename F::Elem sigma(const Arrangement& a, const F& f, const Weights<F>& w, const Flat& x) {
    if ((int)w.size() != a.n()) throw input_error("weight vector length does not match arrangement");
    typename F::Elem s = f.zero();
    for (int h : x.members) s = f.add(s, w[h]);
    return s;
}

template <class F>
bool is_zero_weight(const F& f, const Weights<F>& w) {
    for (const auto& x : w)
        if (!f.is_zero(x)) return false;
    return true;
}

// Basis of {eta : w . eta = 0 in A^2}.
template <class F>
std::vector<Weights<F>> cocycle_space(const Arrangement& a, const F& f, const Weights<F>& w) {
    if ((int)w.size() != a.n()) throw input_error("weight vector length does not match arrangement");
    if (is_zero_weight(f, w)) throw input_error("cocycle_space requires a nonzero weight vector");
    using E = typename F::Elem;
    std::vector<std::vector<E>> rows;
    for (const Flat& x : rank2_flats(a)) {
        E sx = sigma(a, f, w, x);
        for (int h : x.members) {
            std::vector<E> row(a.n(), f.zero());
            row[h] = f.add(row[h], sx);
            for (int g : x.members) row[g] = f.sub(row[g], w[h]);
            rows.push_back(std::move(row));
        }
    }
    return kernel_basis(f, std::move(rows), a.n());
}

// dim H^1 = dim ker(mu_w : A^1 -> A^2) - 1; the degree-0 image is the line
// through w itself.
template <class F>
int beta1(const Arrangement& a, const F& f, const Weights<F>& w) {
    return (int)cocycle_space(a, f, w).size() - 1;
}

inline Weights<PrimeField> all_ones(const Arrangement& a, const PrimeField& f) {
    return Weights<PrimeField>(a.n(), f.one());
}

// beta_p(A) = beta1 with the all-ones weight over F_p.
inline int beta_p(const Arrangement& a, long long p) {
    PrimeField f(p);
    return beta1(a, f, all_ones(a, f));
}

// Independent route through the degree-2 Orlik-Solomon relations. Within a
// rank-2 flat X the basis of the X-block of A^2 is {a_min a_H : H != min},
// and a_H a_K reduces as a_min a_K - a_min a_H.
template <class F>
int os2_matrix_beta(const Arrangement& a, const F& f, const Weights<F>& w) {
    if (a.n() > kFullLatticeCap)
        throw input_error("os2_matrix_beta capped at " + std::to_string(kFullLatticeCap) + " hyperplanes");
    if ((int)w.size() != a.n()) throw input_error("weight vector length does not match arrangement");
    if (is_zero_weight(f, w)) throw input_error("os2_matrix_beta requires a nonzero weight vector");
    using E = typename F::Elem;

    std::vector<Flat> xs = rank2_flats(a);
    // basis row for (flat x, member h != anchor)
    std::vector<std::vector<int>> row_of(xs.size());
    std::vector<int> pair_flat(a.n() * a.n(), -1);
    int nrows = 0;
    for (size_t x = 0; x < xs.size(); ++x) {
        row_of[x].assign(a.n(), -1);
        for (int h : xs[x].members)
            for (int g : xs[x].members)
                if (h != g) pair_flat[h * a.n() + g] = (int)x;
        for (size_t k = 1; k < xs[x].members.size(); ++k) row_of[x][xs[x].members[k]] = nrows++;
    }

    std::vector<std::vector<E>> m(nrows, std::vector<E>(a.n(), f.zero()));
    for (int g = 0; g < a.n(); ++g) {
        // mu_w(a_g) = sum_h w_h a_h a_g, reduced into the anchored basis
        for (int h = 0; h < a.n(); ++h) {
            if (h == g) continue;
            int x = pair_flat[h * a.n() + g];
            int anchor = xs[x].members.front();
            if (g != anchor) {
                int r = row_of[x][g];
                m[r][g] = f.add(m[r][g], w[h]);
            }
            if (h != anchor) {
                int r = row_of[x][h];
                m[r][g] = f.sub(m[r][g], w[h]);
            }
        }
    }
    int nullity = (int)kernel_basis(f, std::move(m), a.n()).size();
    return nullity - 1;
}

// Exhaustive oracle: walks all p^n weight vectors and checks the per-flat
// conditions verbatim. The hit count must be an exact power of p (the
// solution set is linear); anything else is reported as a bug.
inline int brute_force_beta_p(const Arrangement& a, long long p) {
    if (!is_prime(p)) throw input_error("brute_force_beta_p requires a prime");
    const int n = a.n();
    long long total = 1;
    for (int k = 0; k < n; ++k) {
        total *= p;
        if (total > 10'000'000LL) throw input_error("brute-force enumeration cap (10^7) exceeded");
    }

    std::vector<Flat> xs = rank2_flats(a);
    std::vector<std::vector<int>> members;
    std::vector<char> p_divides;
    for (const auto& x : xs) {
        members.push_back(x.members);
        p_divides.push_back(x.multiplicity() % p == 0);
    }

    std::vector<int> eta(n, 0);
    long long count = 0;
    for (long long it = 0; it < total; ++it) {
        bool ok = true;
        for (size_t x = 0; x < members.size() && ok; ++x) {
            const auto& mem = members[x];
            if (p_divides[x]) {
                long long s = 0;
                for (int h : mem) s += eta[h];
                ok = (s % p == 0);
            } else {
                for (size_t k = 1; k < mem.size() && ok; ++k) ok = (eta[mem[k]] == eta[mem[0]]);
            }
        }
        if (ok) ++count;
        int k = 0;
        while (k < n && ++eta[k] == p) eta[k++] = 0;
    }

    int dim = 0;
    long long c = count;
    while (c % p == 0) { c /= p; ++dim; }
    if (c != 1)
        throw theorem_violation("brute-force cocycle count " + std::to_string(count) +
                                " is not a power of " + std::to_string(p));
    return dim - 1;
}

} // namespace graphfiber
