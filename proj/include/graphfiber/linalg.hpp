#pragma once

// Exact linear algebra: fraction-free integer row spans (for lattice ranks
// and closures) and a generic kernel solver over any field context.

#include <cstdint>
#include <utility>
#include <vector>

#include "graphfiber/errors.hpp"
#include "graphfiber/fields.hpp"

namespace graphfiber {

// Row span of integer vectors kept in fraction-free echelon form.
// Reduction uses cross-multiplication only (no division), with a gcd
// shrink after every step so entries stay small.
class IntRowSpan {
public:
    explicit IntRowSpan(int dim) : dim_(dim) {}

    int rank() const { return (int)rows_.size(); }

    bool contains(std::vector<long long> v) const {
        reduce(v);
        for (long long x : v)
            if (x != 0) return false;
        return true;
    }

    // Returns true if v enlarged the span.
    bool insert(std::vector<long long> v) {
        reduce(v);
        int piv = pivot_of(v);
        if (piv < 0) return false;
        normalize(v);
        rows_.push_back({piv, std::move(v)});
        // keep rows sorted by pivot column
        for (size_t i = rows_.size() - 1; i > 0 && rows_[i].first < rows_[i - 1].first; --i)
            std::swap(rows_[i], rows_[i - 1]);
        return true;
    }

private:
    static int pivot_of(const std::vector<long long>& v) {
        for (size_t i = 0; i < v.size(); ++i)
            if (v[i] != 0) return (int)i;
        return -1;
    }

    static void normalize(std::vector<long long>& v) {
        long long g = 0;
        for (long long x : v) g = std::gcd(g, x < 0 ? -x : x);
        if (g > 1)
            for (long long& x : v) x /= g;
    }

    void reduce(std::vector<long long>& v) const {
        for (const auto& [piv, row] : rows_) {
            if (v[piv] == 0) continue;
            __int128 a = row[piv], b = v[piv];
            std::vector<long long> w(dim_);
            for (int j = 0; j < dim_; ++j) {
                __int128 t = a * v[j] - b * row[j];
                w[j] = detail::narrow128(t, "IntRowSpan::reduce");
            }
            normalize(w);
            v = std::move(w);
        }
    }

    int dim_;
    std::vector<std::pair<int, std::vector<long long>>> rows_;
};

inline int int_rank(const std::vector<std::vector<long long>>& rows, int dim) {
    IntRowSpan span(dim);
    for (const auto& r : rows) span.insert(r);
    return span.rank();
}

// Basis of the null space {x : M x^T = 0} of an nrows x ncols matrix over
// the field F, by Gauss-Jordan elimination.
template <class F>
std::vector<std::vector<typename F::Elem>>
kernel_basis(const F& f, std::vector<std::vector<typename F::Elem>> m, int ncols) {
    using E = typename F::Elem;
    const int nrows = (int)m.size();
    std::vector<int> pivot_col;
    int r = 0;
    for (int c = 0; c < ncols && r < nrows; ++c) {
        int pr = -1;
        for (int i = r; i < nrows; ++i)
            if (!f.is_zero(m[i][c])) { pr = i; break; }
        if (pr < 0) continue;
        std::swap(m[r], m[pr]);
        E piv_inv = f.inv(m[r][c]);
        for (int j = c; j < ncols; ++j) m[r][j] = f.mul(m[r][j], piv_inv);
        for (int i = 0; i < nrows; ++i) {
            if (i == r || f.is_zero(m[i][c])) continue;
            E t = m[i][c];
            for (int j = c; j < ncols; ++j) m[i][j] = f.sub(m[i][j], f.mul(t, m[r][j]));
        }
        pivot_col.push_back(c);
        ++r;
    }
    std::vector<char> is_pivot(ncols, 0);
    for (int c : pivot_col) is_pivot[c] = 1;
    std::vector<std::vector<E>> basis;
    for (int c = 0; c < ncols; ++c) {
        if (is_pivot[c]) continue;
        std::vector<E> v(ncols, f.zero());
        v[c] = f.one();
        for (int i = 0; i < (int)pivot_col.size(); ++i) v[pivot_col[i]] = f.neg(m[i][c]);
        basis.push_back(std::move(v));
    }
    return basis;
}

template <class F>
int matrix_rank(const F& f, std::vector<std::vector<typename F::Elem>> m, int ncols) {
    int nullity = (int)kernel_basis(f, std::move(m), ncols).size();
    return ncols - nullity;
}

} // namespace graphfiber
