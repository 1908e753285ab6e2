#pragma once

// Shared builders for the test suites.

#include <vector>

#include "graphfiber/graph.hpp"

namespace gftest {

using graphfiber::SignedEdge;
using graphfiber::SignedGraph;

// complete signed graph on v vertices (every pair a double edge)
inline SignedGraph coxeter_d(int v) {
    std::vector<SignedEdge> e;
    for (int i = 1; i <= v; ++i)
        for (int j = i + 1; j <= v; ++j) {
            e.push_back({i, j, -1});
            e.push_back({i, j, 1});
        }
    return graphfiber::make_graph(v, {}, std::move(e));
}

// complete unsigned graph on v vertices (all edges negative)
inline SignedGraph complete_unsigned(int v) {
    std::vector<SignedEdge> e;
    for (int i = 1; i <= v; ++i)
        for (int j = i + 1; j <= v; ++j) e.push_back({i, j, -1});
    return graphfiber::make_graph(v, {}, std::move(e));
}

inline SignedGraph k4_minus_edge() {
    return graphfiber::make_graph(4, {}, {{1, 2, -1}, {1, 3, -1}, {1, 4, -1}, {2, 3, -1}, {2, 4, -1}});
}

// double edge {1,2} plus loops at both endpoints: the 4-hyperplane pencil
inline SignedGraph pencil4() {
    return graphfiber::make_graph(2, {1, 2}, {{1, 2, -1}, {1, 2, 1}});
}

} // namespace gftest
