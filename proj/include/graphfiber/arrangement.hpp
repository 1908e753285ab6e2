#pragma once

// Central hyperplane arrangements built from signed graphs: one hyperplane
// x_i = 0 per loop and x_i + s x_j = 0 per signed edge. Flats are closed
// sets of hyperplane indices; closure and ranks use exact integer spans.

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "graphfiber/errors.hpp"
#include "graphfiber/graph.hpp"
#include "graphfiber/linalg.hpp"

namespace graphfiber {

inline constexpr int kFullLatticeCap = 20; // hyperplane cap for whole-lattice work

struct OriginTag {
    enum class Kind { None, Loop, Edge } kind = Kind::None;
    int i = 0, j = 0, sign = 0;

    friend bool operator==(const OriginTag&, const OriginTag&) = default;

    std::string str() const {
        switch (kind) {
            case Kind::Loop: return "loop(" + std::to_string(i) + ")";
            case Kind::Edge:
                return "edge(" + std::to_string(i) + "," + std::to_string(j) + "," +
                       (sign < 0 ? "-" : "+") + ")";
            default: return "none";
        }
    }
};

struct Hyperplane {
    std::vector<long long> normal;
    OriginTag origin;
};

struct Arrangement {
    int ambient_dim = 0;
    std::vector<Hyperplane> hyperplanes;
    int rank = 0;
    bool graphic = false;

    int n() const { return (int)hyperplanes.size(); }
};

struct Flat {
    std::vector<int> members; // sorted hyperplane indices
    int rank = 0;

    int multiplicity() const { return (int)members.size(); }
    bool contains(int h) const { return std::binary_search(members.begin(), members.end(), h); }
    friend bool operator==(const Flat&, const Flat&) = default;
};

namespace detail {

inline void check_pairwise_nonparallel(const std::vector<Hyperplane>& hs, int dim) {
    for (size_t a = 0; a < hs.size(); ++a)
        for (size_t b = a + 1; b < hs.size(); ++b) {
            IntRowSpan span(dim);
            span.insert(hs[a].normal);
            if (span.contains(hs[b].normal))
                throw input_error("hyperplanes must be pairwise distinct up to scalar");
        }
}

inline int normals_rank(const std::vector<Hyperplane>& hs, int dim) {
    IntRowSpan span(dim);
    for (const auto& h : hs) span.insert(h.normal);
    return span.rank();
}

} // namespace detail

inline Arrangement arrangement_from_normals(int ambient_dim, std::vector<std::vector<long long>> normals) {
    if (normals.empty()) throw input_error("empty arrangement");
    Arrangement a;
    a.ambient_dim = ambient_dim;
    for (auto& nv : normals) {
        if ((int)nv.size() != ambient_dim) throw input_error("normal vector has wrong dimension");
        bool nonzero = false;
        for (long long x : nv) nonzero |= (x != 0);
        if (!nonzero) throw input_error("zero normal vector");
        a.hyperplanes.push_back({std::move(nv), {}});
    }
    detail::check_pairwise_nonparallel(a.hyperplanes, ambient_dim);
    a.rank = detail::normals_rank(a.hyperplanes, ambient_dim);
    return a;
}

// Hyperplanes in the serialized order of the graph: loops ascending, then
// edges ascending by (i, j, sign).
inline Arrangement build_arrangement(const SignedGraph& g) {
    if (g.hyperplane_count() == 0) throw input_error("empty graph: no loops or edges");
    Arrangement a;
    a.ambient_dim = g.vertex_count;
    a.graphic = true;
    for (int v : g.loops) {
        std::vector<long long> nv(g.vertex_count, 0);
        nv[v - 1] = 1;
        a.hyperplanes.push_back({std::move(nv), {OriginTag::Kind::Loop, v, 0, 0}});
    }
    for (const auto& e : g.edges) {
        std::vector<long long> nv(g.vertex_count, 0);
        nv[e.i - 1] = 1;
        nv[e.j - 1] = e.sign;
        a.hyperplanes.push_back({std::move(nv), {OriginTag::Kind::Edge, e.i, e.j, e.sign}});
    }
    a.rank = detail::normals_rank(a.hyperplanes, a.ambient_dim);
    return a;
}

inline Arrangement localize(const Arrangement& a, const std::vector<int>& members) {
    Arrangement loc;
    loc.ambient_dim = a.ambient_dim;
    loc.graphic = a.graphic;
    for (int h : members) loc.hyperplanes.push_back(a.hyperplanes[h]);
    loc.rank = detail::normals_rank(loc.hyperplanes, loc.ambient_dim);
    return loc;
}

// Smallest flat containing the given hyperplanes: every index whose normal
// lies in the rational span of theirs.
inline Flat closure(const Arrangement& a, const std::vector<int>& members) {
    IntRowSpan span(a.ambient_dim);
    for (int h : members) span.insert(a.hyperplanes[h].normal);
    Flat f;
    f.rank = span.rank();
    for (int h = 0; h < a.n(); ++h)
        if (span.contains(a.hyperplanes[h].normal)) f.members.push_back(h);
    return f;
}

inline Flat center(const Arrangement& a) {
    Flat f;
    f.rank = a.rank;
    f.members.resize(a.n());
    for (int h = 0; h < a.n(); ++h) f.members[h] = h;
    return f;
}

// All flats of rank <= up_to_rank, by iterated joins: level k+1 flats are
// closures of (level-k flat) + (one hyperplane outside it).
inline std::vector<Flat> flats(const Arrangement& a, int up_to_rank) {
    if (up_to_rank < 1 || up_to_rank > a.rank) throw input_error("flat rank bound out of range");
    std::vector<Flat> all;
    std::vector<Flat> level;
    for (int h = 0; h < a.n(); ++h) level.push_back(Flat{{h}, 1});
    all = level;
    for (int r = 2; r <= up_to_rank; ++r) {
        std::set<std::vector<int>> seen;
        std::vector<Flat> next;
        for (const auto& f : level)
            for (int h = 0; h < a.n(); ++h) {
                if (f.contains(h)) continue;
                std::vector<int> gen = f.members;
                gen.push_back(h);
                Flat c = closure(a, gen);
                if (seen.insert(c.members).second) next.push_back(std::move(c));
            }
        all.insert(all.end(), next.begin(), next.end());
        level = std::move(next);
    }
    return all;
}

inline std::vector<Flat> full_lattice(const Arrangement& a) {
    if (a.n() > kFullLatticeCap)
        throw input_error("full lattice capped at " + std::to_string(kFullLatticeCap) + " hyperplanes");
    return flats(a, a.rank);
}

inline std::vector<Flat> rank2_flats(const Arrangement& a) {
    std::vector<Flat> out;
    if (a.rank < 2) return out;
    for (auto& f : flats(a, 2))
        if (f.rank == 2) out.push_back(std::move(f));
    return out;
}

struct Polynomial {
    std::vector<long long> c; // coefficients by ascending degree, no trailing zeros

    Polynomial() = default;
    Polynomial(std::vector<long long> coeffs) : c(std::move(coeffs)) { trim(); }

    void trim() {
        while (!c.empty() && c.back() == 0) c.pop_back();
    }
    int degree() const { return (int)c.size() - 1; }
    long long at(int k) const { return k >= 0 && k < (int)c.size() ? c[k] : 0; }
    long long eval(long long x) const {
        long long v = 0;
        for (int k = degree(); k >= 0; --k) v = v * x + c[k];
        return v;
    }
    friend bool operator==(const Polynomial&, const Polynomial&) = default;

    std::string str() const {
        if (c.empty()) return "0";
        std::string s;
        for (int k = 0; k < (int)c.size(); ++k) {
            if (c[k] == 0) continue;
            if (!s.empty()) s += " + ";
            s += std::to_string(c[k]);
            if (k >= 1) s += "t";
            if (k >= 2) s += "^" + std::to_string(k);
        }
        return s.empty() ? "0" : s;
    }
};

inline Polynomial operator+(const Polynomial& p, const Polynomial& q) {
    std::vector<long long> c(std::max(p.c.size(), q.c.size()), 0);
    for (size_t k = 0; k < c.size(); ++k) c[k] = p.at((int)k) + q.at((int)k);
    return Polynomial(std::move(c));
}

inline Polynomial operator*(const Polynomial& p, const Polynomial& q) {
    if (p.c.empty() || q.c.empty()) return Polynomial{};
    std::vector<long long> c(p.c.size() + q.c.size() - 1, 0);
    for (size_t i = 0; i < p.c.size(); ++i)
        for (size_t j = 0; j < q.c.size(); ++j) c[i + j] += p.c[i] * q.c[j];
    return Polynomial(std::move(c));
}

inline Polynomial shift(const Polynomial& p, int k) { // multiply by t^k
    if (p.c.empty()) return p;
    std::vector<long long> c(p.c.size() + k, 0);
    std::copy(p.c.begin(), p.c.end(), c.begin() + k);
    return Polynomial(std::move(c));
}

namespace detail {

// quotient of p by (t + 1); remainder is p(-1)
inline Polynomial divide_by_t_plus_1(const Polynomial& p, long long& rem) {
    int d = p.degree();
    if (d < 1) { rem = p.at(0); return Polynomial{}; }
    std::vector<long long> q(d, 0);
    q[d - 1] = p.at(d);
    for (int i = d - 1; i >= 1; --i) q[i - 1] = p.at(i) - q[i];
    rem = p.at(0) - q[0];
    return Polynomial(std::move(q));
}

} // namespace detail

inline bool divisible_by_one_plus_t_squared(const Polynomial& p) {
    long long r1 = 0, r2 = 0;
    Polynomial q = detail::divide_by_t_plus_1(p, r1);
    if (r1 != 0) return false;
    detail::divide_by_t_plus_1(q, r2);
    return r2 == 0;
}

// P_A(t) = sum over flats X of |mu(0,X)| t^rk(X), via the Mobius recursion
// on the member-set containment order.
inline Polynomial poincare_polynomial(const Arrangement& a) {
    std::vector<Flat> lat = full_lattice(a);
    std::sort(lat.begin(), lat.end(), [](const Flat& x, const Flat& y) {
        return x.rank != y.rank ? x.rank < y.rank : x.members < y.members;
    });
    std::vector<long long> mu(lat.size());
    std::vector<long long> coeff(a.rank + 1, 0);
    coeff[0] = 1; // mu of the bottom element
    for (size_t x = 0; x < lat.size(); ++x) {
        long long s = 1; // bottom is below every flat
        for (size_t y = 0; y < x; ++y) {
            if (lat[y].rank >= lat[x].rank) break;
            if (std::includes(lat[x].members.begin(), lat[x].members.end(),
                              lat[y].members.begin(), lat[y].members.end()))
                s += mu[y];
        }
        mu[x] = -s;
        coeff[lat[x].rank] += mu[x] < 0 ? -mu[x] : mu[x];
    }
    return Polynomial(std::move(coeff));
}

// Dense flats are not decomposable as a nontrivial product; equivalently,
// (1+t)^2 does not divide the Poincare polynomial of the localization.
inline bool is_dense(const Arrangement& a, const Flat& x) {
    return !divisible_by_one_plus_t_squared(poincare_polynomial(localize(a, x.members)));
}

// Rank-2 subgraph shapes. The m = 2 shapes come in six configurations; the
// dense ones (m >= 3) are the loop-loop-edge, loop-double-edge, negative
// triangle and full four-hyperplane pencil.
enum class Rank2Shape {
    DoubleEdge,       // double edge, no loops at its endpoints
    DisjointEdges,    // two edges on disjoint vertex pairs
    OpenPath,         // two edges sharing one vertex, closing edge absent
    LoopIncidentEdge, // loop at i plus simple edge {i,j}, no loop at j
    LoopDisjointEdge, // loop away from an edge
    TwoLoops,         // two loops, no edge between them
    LoopLoopEdge,     // loops at i and j plus simple edge {i,j}    (m = 3)
    LoopDoubleEdge,   // loop at one endpoint of a double edge      (m = 3)
    NegativeTriangle, // triangle with sign product -1              (m = 3)
    FullPencil4       // double edge with loops at both endpoints   (m = 4)
};

inline const char* to_string(Rank2Shape s) {
    switch (s) {
        case Rank2Shape::DoubleEdge: return "double_edge";
        case Rank2Shape::DisjointEdges: return "disjoint_edges";
        case Rank2Shape::OpenPath: return "open_path";
        case Rank2Shape::LoopIncidentEdge: return "loop_incident_edge";
        case Rank2Shape::LoopDisjointEdge: return "loop_disjoint_edge";
        case Rank2Shape::TwoLoops: return "two_loops";
        case Rank2Shape::LoopLoopEdge: return "loop_loop_edge";
        case Rank2Shape::LoopDoubleEdge: return "loop_double_edge";
        case Rank2Shape::NegativeTriangle: return "negative_triangle";
        case Rank2Shape::FullPencil4: return "full_pencil4";
    }
    return "?";
}

namespace detail {

inline Rank2Shape classify_rank2(const Arrangement& a, const Flat& f) {
    std::vector<OriginTag> loops, edges;
    for (int h : f.members) {
        const OriginTag& t = a.hyperplanes[h].origin;
        if (t.kind == OriginTag::Kind::Loop) loops.push_back(t);
        else if (t.kind == OriginTag::Kind::Edge) edges.push_back(t);
        else throw input_error("rank2_profile requires a graphic arrangement");
    }
    const int m = f.multiplicity();
    auto fail = [&] {
        throw theorem_violation("rank-2 flat does not match the graphic inventory");
    };
    auto same_pair = [](const OriginTag& e1, const OriginTag& e2) {
        return e1.i == e2.i && e1.j == e2.j;
    };
    if (m == 2) {
        if (loops.size() == 2) return Rank2Shape::TwoLoops;
        if (loops.size() == 1) {
            const OriginTag& e = edges[0];
            bool incident = (e.i == loops[0].i || e.j == loops[0].i);
            return incident ? Rank2Shape::LoopIncidentEdge : Rank2Shape::LoopDisjointEdge;
        }
        if (same_pair(edges[0], edges[1])) return Rank2Shape::DoubleEdge;
        bool share = edges[0].i == edges[1].i || edges[0].i == edges[1].j ||
                     edges[0].j == edges[1].i || edges[0].j == edges[1].j;
        return share ? Rank2Shape::OpenPath : Rank2Shape::DisjointEdges;
    }
    if (m == 3) {
        if (loops.size() == 2 && edges.size() == 1) {
            const OriginTag& e = edges[0];
            if ((e.i == loops[0].i && e.j == loops[1].i) || (e.i == loops[1].i && e.j == loops[0].i))
                return Rank2Shape::LoopLoopEdge;
            fail();
        }
        if (loops.size() == 1 && edges.size() == 2) {
            if (same_pair(edges[0], edges[1]) &&
                (loops[0].i == edges[0].i || loops[0].i == edges[0].j))
                return Rank2Shape::LoopDoubleEdge;
            fail();
        }
        if (loops.empty() && edges.size() == 3) {
            std::set<int> verts;
            int prod = 1;
            for (const auto& e : edges) {
                verts.insert(e.i);
                verts.insert(e.j);
                prod *= e.sign;
            }
            if (verts.size() == 3 && prod == -1) return Rank2Shape::NegativeTriangle;
            fail();
        }
        fail();
    }
    if (m == 4) {
        if (loops.size() == 2 && edges.size() == 2 && same_pair(edges[0], edges[1])) {
            std::set<int> lv{loops[0].i, loops[1].i};
            if (lv == std::set<int>{edges[0].i, edges[0].j}) return Rank2Shape::FullPencil4;
        }
        fail();
    }
    fail();
    return Rank2Shape::DoubleEdge; // unreachable
}

} // namespace detail

inline std::vector<std::pair<Flat, Rank2Shape>> rank2_profile(const Arrangement& a) {
    if (!a.graphic) throw input_error("rank2_profile requires a graphic arrangement");
    std::vector<std::pair<Flat, Rank2Shape>> out;
    if (a.rank < 2) return out;
    for (auto& f : flats(a, 2)) {
        if (f.rank != 2) continue;
        Rank2Shape s = detail::classify_rank2(a, f);
        out.emplace_back(std::move(f), s);
    }
    return out;
}

// Multiset of multiplicities m_X over dense flats with 2 <= rk(X) <= k;
// when avoid is set, restricted to flats not containing that hyperplane.
inline std::vector<int> m_list(const Arrangement& a, int k, std::optional<int> avoid = std::nullopt) {
    if (k < 2 || k > a.rank) throw input_error("m_list rank bound out of range");
    if (avoid && (*avoid < 0 || *avoid >= a.n())) throw input_error("m_list avoid index out of range");
    std::vector<int> out;
    for (const auto& f : flats(a, k)) {
        if (f.rank < 2) continue;
        if (avoid && f.contains(*avoid)) continue;
        if (!is_dense(a, f)) continue;
        out.push_back(f.multiplicity());
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace graphfiber
