#pragma once

// Signed graphs with loops. Vertices are 1-based ids in {1..l}; an edge
// carries i < j and a sign in {+1,-1}; a pair {i,j} may carry both signs
// (a double edge). Sign convention: -1 encodes the hyperplane x_i - x_j,
// +1 encodes x_i + x_j (an unlabeled edge in the usual drawings is -1).

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "graphfiber/errors.hpp"

namespace graphfiber {

struct SignedEdge {
    int i, j, sign;
    friend auto operator<=>(const SignedEdge&, const SignedEdge&) = default;
};

struct SignedGraph {
    int vertex_count = 0;
    std::vector<int> loops;       // sorted ascending
    std::vector<SignedEdge> edges; // sorted by (i, j, sign)

    friend bool operator==(const SignedGraph&, const SignedGraph&) = default;

    int hyperplane_count() const { return (int)loops.size() + (int)edges.size(); }
};

struct UnsignedGraph {
    int vertex_count = 0;
    std::vector<std::pair<int, int>> edges; // sorted, i < j

    friend bool operator==(const UnsignedGraph&, const UnsignedGraph&) = default;
};

// Validates and normalizes: sorts loops/edges, swaps edge endpoints to i < j
// (the hyperplane x_i + s x_j is symmetric in {i,j} up to scalar, so the
// swap is meaning-preserving for either sign).
inline SignedGraph make_graph(int vertex_count, std::vector<int> loops, std::vector<SignedEdge> edges) {
    if (vertex_count < 1) throw input_error("vertex count must be positive");
    if (vertex_count > 32) throw input_error("vertex count cap (32) exceeded");
    for (int v : loops)
        if (v < 1 || v > vertex_count) throw input_error("loop vertex id out of range");
    std::sort(loops.begin(), loops.end());
    if (std::adjacent_find(loops.begin(), loops.end()) != loops.end())
        throw input_error("duplicate loop");
    for (auto& e : edges) {
        if (e.i == e.j) throw input_error("self-edge must be a loop");
        if (e.i < 1 || e.i > vertex_count || e.j < 1 || e.j > vertex_count)
            throw input_error("edge vertex id out of range");
        if (e.sign != 1 && e.sign != -1) throw input_error("edge sign must be +1 or -1");
        if (e.i > e.j) std::swap(e.i, e.j);
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
        throw input_error("duplicate edge");
    return SignedGraph{vertex_count, std::move(loops), std::move(edges)};
}

// Canonical byte serialization; loops and edges ascending, no whitespace.
// canonical_form compares exactly these bytes, so this function is the
// single definition of the interchange format and of the total order.
inline std::string serialize_graph(const SignedGraph& g) {
    std::string s;
    s.reserve(48 + 10 * g.edges.size() + 3 * g.loops.size());
    s += "{\"vertices\":";
    s += std::to_string(g.vertex_count);
    s += ",\"loops\":[";
    for (size_t k = 0; k < g.loops.size(); ++k) {
        if (k) s += ',';
        s += std::to_string(g.loops[k]);
    }
    s += "],\"edges\":[";
    for (size_t k = 0; k < g.edges.size(); ++k) {
        if (k) s += ',';
        s += '[';
        s += std::to_string(g.edges[k].i);
        s += ',';
        s += std::to_string(g.edges[k].j);
        s += ',';
        s += std::to_string(g.edges[k].sign);
        s += ']';
    }
    s += "]}";
    return s;
}

inline UnsignedGraph underlying(const SignedGraph& g) {
    UnsignedGraph u;
    u.vertex_count = g.vertex_count;
    for (const auto& e : g.edges) {
        std::pair<int, int> p{e.i, e.j};
        if (u.edges.empty() || u.edges.back() != p) u.edges.push_back(p);
    }
    return u;
}

// Flip the sign of every edge incident to v (the coordinate change x_v -> -x_v).
inline SignedGraph switch_vertex(const SignedGraph& g, int v) {
    if (v < 1 || v > g.vertex_count) throw input_error("switch vertex out of range");
    std::vector<SignedEdge> edges = g.edges;
    for (auto& e : edges)
        if (e.i == v || e.j == v) e.sign = -e.sign;
    return make_graph(g.vertex_count, g.loops, std::move(edges));
}

// perm maps old vertex id -> new vertex id; must be a bijection of {1..l}.
inline SignedGraph relabel(const SignedGraph& g, const std::vector<int>& perm) {
    if ((int)perm.size() != g.vertex_count) throw input_error("relabel permutation has wrong size");
    std::vector<char> seen(g.vertex_count + 1, 0);
    for (int x : perm) {
        if (x < 1 || x > g.vertex_count || seen[x]) throw input_error("relabel is not a permutation");
        seen[x] = 1;
    }
    std::vector<int> loops;
    for (int v : g.loops) loops.push_back(perm[v - 1]);
    std::vector<SignedEdge> edges;
    for (const auto& e : g.edges) edges.push_back({perm[e.i - 1], perm[e.j - 1], e.sign});
    return make_graph(g.vertex_count, std::move(loops), std::move(edges));
}

// Drops isolated vertices and renumbers the support to {1..k}. Used by the
// exceptional-pattern cross check; arrangement-level invariants do not
// depend on isolated vertices.
inline SignedGraph compact(const SignedGraph& g) {
    std::vector<char> used(g.vertex_count + 1, 0);
    for (int v : g.loops) used[v] = 1;
    for (const auto& e : g.edges) used[e.i] = used[e.j] = 1;
    std::vector<int> newid(g.vertex_count + 1, 0);
    int next = 0;
    for (int v = 1; v <= g.vertex_count; ++v)
        if (used[v]) newid[v] = ++next;
    if (next == 0) throw input_error("cannot compact a graph with no edges or loops");
    std::vector<int> loops;
    for (int v : g.loops) loops.push_back(newid[v]);
    std::vector<SignedEdge> edges;
    for (const auto& e : g.edges) edges.push_back({newid[e.i], newid[e.j], e.sign});
    return make_graph(next, std::move(loops), std::move(edges));
}

namespace detail {

// Packed form used by the canonicalization search: a loop bitmask and one
// 2-bit state per vertex pair (0 none, 1 sign -1, 2 sign +1, 3 double).
struct GraphCode {
    int l = 0;
    uint32_t loops = 0;
    std::array<uint8_t, 28> pairs{}; // C(8,2) pairs max

    static int pair_index(int i, int j, int l) { // 1 <= i < j <= l
        return (i - 1) * l - i * (i - 1) / 2 + (j - i - 1);
    }
};

inline GraphCode encode(const SignedGraph& g) {
    if (g.vertex_count > 8) throw input_error("canonical form supports at most 8 vertices");
    GraphCode c;
    c.l = g.vertex_count;
    for (int v : g.loops) c.loops |= 1u << (v - 1);
    for (const auto& e : g.edges)
        c.pairs[GraphCode::pair_index(e.i, e.j, c.l)] |= (e.sign < 0 ? 1 : 2);
    return c;
}

inline SignedGraph decode(const GraphCode& c) {
    std::vector<int> loops;
    for (int v = 1; v <= c.l; ++v)
        if (c.loops >> (v - 1) & 1) loops.push_back(v);
    std::vector<SignedEdge> edges;
    for (int i = 1; i <= c.l; ++i)
        for (int j = i + 1; j <= c.l; ++j) {
            uint8_t st = c.pairs[GraphCode::pair_index(i, j, c.l)];
            if (st & 1) edges.push_back({i, j, -1});
            if (st & 2) edges.push_back({i, j, 1});
        }
    return make_graph(c.l, std::move(loops), std::move(edges));
}

inline void serialize_code(const GraphCode& c, std::string& out) {
    out.clear();
    out += "{\"vertices\":";
    out += char('0' + c.l);
    out += ",\"loops\":[";
    bool first = true;
    for (int v = 1; v <= c.l; ++v)
        if (c.loops >> (v - 1) & 1) {
            if (!first) out += ',';
            out += char('0' + v);
            first = false;
        }
    out += "],\"edges\":[";
    first = true;
    for (int i = 1; i <= c.l; ++i)
        for (int j = i + 1; j <= c.l; ++j) {
            uint8_t st = c.pairs[GraphCode::pair_index(i, j, c.l)];
            if (!st) continue;
            if (st & 1) {
                if (!first) out += ',';
                out += '[';
                out += char('0' + i);
                out += ',';
                out += char('0' + j);
                out += ",-1]";
                first = false;
            }
            if (st & 2) {
                if (!first) out += ',';
                out += '[';
                out += char('0' + i);
                out += ',';
                out += char('0' + j);
                out += ",1]";
                first = false;
            }
        }
    out += "]}";
}

// state under a sign flip at exactly one endpoint: -1 <-> +1, none/double fixed
inline uint8_t flip_state(uint8_t st) {
    static constexpr uint8_t tbl[4] = {0, 2, 1, 3};
    return tbl[st];
}

inline GraphCode apply_transform(const GraphCode& c, const std::vector<int>& perm, uint32_t switch_mask) {
    GraphCode out;
    out.l = c.l;
    for (int v = 1; v <= c.l; ++v)
        if (c.loops >> (v - 1) & 1) out.loops |= 1u << (perm[v - 1] - 1);
    for (int i = 1; i <= c.l; ++i)
        for (int j = i + 1; j <= c.l; ++j) {
            uint8_t st = c.pairs[GraphCode::pair_index(i, j, c.l)];
            if (!st) continue;
            bool flip = ((switch_mask >> (i - 1)) ^ (switch_mask >> (j - 1))) & 1;
            if (flip) st = flip_state(st);
            int a = perm[i - 1], b = perm[j - 1];
            if (a > b) std::swap(a, b);
            out.pairs[GraphCode::pair_index(a, b, c.l)] = st;
        }
    return out;
}

// Visits every (permutation, switching-set) image of c.
template <class Fn>
void for_each_transform(const GraphCode& c, Fn&& fn) {
    std::vector<int> perm(c.l);
    std::iota(perm.begin(), perm.end(), 1);
    do {
        for (uint32_t mask = 0; mask < (1u << c.l); ++mask) fn(apply_transform(c, perm, mask));
    } while (std::next_permutation(perm.begin(), perm.end()));
}

} // namespace detail

// Minimum representative of the switching/relabeling orbit of g, under the
// byte order of the canonical serialization. Brute force over l! * 2^l
// transforms; intended for l <= 6, hard capped at 8.
inline SignedGraph canonical_form(const SignedGraph& g) {
    detail::GraphCode code = detail::encode(g);
    std::string best, cur;
    detail::serialize_code(code, best);
    detail::GraphCode best_code = code;
    detail::for_each_transform(code, [&](const detail::GraphCode& t) {
        detail::serialize_code(t, cur);
        if (cur < best) {
            best = cur;
            best_code = t;
        }
    });
    return detail::decode(best_code);
}

namespace detail {

inline bool has_isolated_vertex(const GraphCode& c) {
    uint32_t covered = c.loops;
    for (int i = 1; i <= c.l; ++i)
        for (int j = i + 1; j <= c.l; ++j)
            if (c.pairs[GraphCode::pair_index(i, j, c.l)])
                covered |= (1u << (i - 1)) | (1u << (j - 1));
    return covered != (1u << c.l) - 1;
}

inline bool is_connected(const GraphCode& c) {
    // loops do not join anything; components over edge pairs only
    std::vector<int> parent(c.l);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (int i = 1; i <= c.l; ++i)
        for (int j = i + 1; j <= c.l; ++j)
            if (c.pairs[GraphCode::pair_index(i, j, c.l)]) parent[find(i - 1)] = find(j - 1);
    int root = find(0);
    for (int v = 1; v < c.l; ++v)
        if (find(v) != root) return false;
    return true;
}

inline bool is_orbit_minimum(const GraphCode& c, const std::vector<std::vector<int>>& perms) {
    thread_local std::string self, cur;
    serialize_code(c, self);
    for (const auto& perm : perms)
        for (uint32_t mask = 0; mask < (1u << c.l); ++mask) {
            serialize_code(apply_transform(c, perm, mask), cur);
            if (cur < self) return false;
        }
    return true;
}

// The loops section is serialized before the edges, so an orbit minimum
// must carry its loops exactly on {1..k}; only permutations stabilizing
// that prefix set can produce a smaller byte string.
inline std::vector<std::vector<std::vector<int>>> prefix_stabilizer_perms(int l) {
    std::vector<std::vector<std::vector<int>>> by_k(l + 1);
    std::vector<int> perm(l);
    std::iota(perm.begin(), perm.end(), 1);
    do {
        for (int k = 0; k <= l; ++k) {
            bool stab = true;
            for (int i = 0; i < k; ++i) stab &= (perm[i] <= k);
            if (stab) by_k[k].push_back(perm);
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return by_k;
}

} // namespace detail

// One representative per switching/relabeling class of signed graphs with
// loops, no isolated vertices, on exactly l vertices for each l <= v_max.
// Deterministic order: by l, then ascending serialized bytes. Exhaustive
// scan over all labeled graphs; v_max = 4 is instant, 5 takes minutes.
template <class Fn>
void enumerate_graphs(int v_max, bool connected_only, Fn&& yield) {
    if (v_max < 1) throw input_error("v_max must be positive");
    if (v_max > 6) throw input_error("enumeration cap (6 vertices) exceeded");
    for (int l = 1; l <= v_max; ++l) {
        const int npairs = l * (l - 1) / 2;
        std::vector<std::pair<std::string, detail::GraphCode>> level;
        detail::GraphCode c;
        c.l = l;
        const uint64_t loop_states = 1ull << l;
        const auto stab = detail::prefix_stabilizer_perms(l);
        std::vector<int> odo(npairs, 0);
        for (;;) {
            for (uint32_t lm = 0; lm < loop_states; ++lm) {
                if (lm & (lm + 1)) continue; // minima carry loops on a prefix {1..k}
                c.loops = lm;
                if (detail::has_isolated_vertex(c)) continue;
                if (connected_only && !detail::is_connected(c)) continue;
                int k = std::popcount(lm);
                if (!detail::is_orbit_minimum(c, stab[k])) continue;
                std::string s;
                detail::serialize_code(c, s);
                level.emplace_back(std::move(s), c);
            }
            // advance the pair-state odometer
            int k = 0;
            while (k < npairs) {
                if (++odo[k] < 4) { c.pairs[k] = (uint8_t)odo[k]; break; }
                odo[k] = 0;
                c.pairs[k] = 0;
                ++k;
            }
            if (k == npairs) break;
        }
        std::sort(level.begin(), level.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        for (const auto& [s, code] : level) yield(detail::decode(code));
    }
}

inline std::vector<SignedGraph> enumerate_graphs(int v_max, bool connected_only = false) {
    std::vector<SignedGraph> out;
    enumerate_graphs(v_max, connected_only, [&](const SignedGraph& g) { out.push_back(g); });
    return out;
}

} // namespace graphfiber
