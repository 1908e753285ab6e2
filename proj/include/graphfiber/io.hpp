#pragma once

// JSON ingestion and the report objects emitted by the CLI. Reports use
// ordered JSON and deterministic orderings throughout, so a fixed input
// always produces identical bytes.

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "json.hpp"

#include "graphfiber/aomoto.hpp"
#include "graphfiber/arrangement.hpp"
#include "graphfiber/errors.hpp"
#include "graphfiber/graph.hpp"
#include "graphfiber/milnor.hpp"
#include "graphfiber/resonance.hpp"

namespace graphfiber {

using ojson = nlohmann::ordered_json;

// Strict parse of {"vertices": l, "loops": [...], "edges": [[i,j,s],...]}.
// Edges are normalized to i < j; anything else out of schema is rejected.
inline SignedGraph parse_graph(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw input_error(std::string("malformed graph document: ") + e.what());
    }
    if (!j.is_object() || j.size() != 3 || !j.contains("vertices") || !j.contains("loops") ||
        !j.contains("edges"))
        throw input_error("graph document must have exactly the keys vertices, loops, edges");
    if (!j["vertices"].is_number_integer())
        throw input_error("vertices must be an integer");
    int l = j["vertices"].get<int>();
    if (!j["loops"].is_array() || !j["edges"].is_array())
        throw input_error("loops and edges must be arrays");
    std::vector<int> loops;
    for (const auto& v : j["loops"]) {
        if (!v.is_number_integer()) throw input_error("loop entries must be integers");
        loops.push_back(v.get<int>());
    }
    std::vector<SignedEdge> edges;
    for (const auto& e : j["edges"]) {
        if (!e.is_array() || e.size() != 3 || !e[0].is_number_integer() ||
            !e[1].is_number_integer() || !e[2].is_number_integer())
            throw input_error("edges must be [i, j, sign] integer triples");
        edges.push_back({e[0].get<int>(), e[1].get<int>(), e[2].get<int>()});
    }
    return make_graph(l, std::move(loops), std::move(edges));
}

inline ojson graph_json(const SignedGraph& g) {
    ojson j;
    j["vertices"] = g.vertex_count;
    j["loops"] = g.loops;
    j["edges"] = ojson::array();
    for (const auto& e : g.edges) j["edges"].push_back({e.i, e.j, e.sign});
    return j;
}

inline ojson beta_report(const SignedGraph& g, const std::vector<long long>& extra_primes = {},
                         bool cross_check = false, bool oracle = false) {
    Arrangement a = build_arrangement(g);
    std::set<long long> primes{2, 3, 5, 7};
    for (long long p : extra_primes) {
        if (!is_prime(p)) throw input_error("--p must be prime");
        primes.insert(p);
    }
    ojson j;
    j["n"] = a.n();
    j["rank"] = a.rank;
    j["beta"] = ojson::object();
    for (long long p : primes) {
        int b = beta_p(a, p);
        if (cross_check && a.n() <= kFullLatticeCap) {
            PrimeField f(p);
            int b2 = os2_matrix_beta(a, f, all_ones(a, f));
            if (b2 != b)
                throw theorem_violation("os2 cross check disagrees at p = " + std::to_string(p));
        }
        if (oracle) {
            long long total = 1;
            bool in_cap = true;
            for (int k = 0; k < a.n() && in_cap; ++k) {
                total *= p;
                if (total > 10'000'000LL) in_cap = false;
            }
            if (in_cap && brute_force_beta_p(a, p) != b)
                throw theorem_violation("brute-force oracle disagrees at p = " + std::to_string(p));
        }
        j["beta"][std::to_string(p)] = b;
    }
    return j;
}

inline ojson decomposition_json(const CyclotomicDecomposition& dec) {
    ojson arr = ojson::array();
    for (const auto& [d, e] : dec.exponents) arr.push_back({{"d", d}, {"exp", e}});
    return arr;
}

inline ojson milnor_report(const SignedGraph& g, bool cross_check = false) {
    Arrangement a = build_arrangement(g);
    CyclotomicDecomposition dec = h1_decomposition(a);
    ExceptionalClass cls = a.rank >= 3 ? classify_exceptional(g, cross_check)
                                       : ExceptionalClass::NotExceptional;
    ojson j;
    j["n"] = a.n();
    j["rank"] = a.rank;
    j["decomposition"] = decomposition_json(dec);
    j["class"] = to_string(cls);
    j["formula"] = decomposition_formula(dec);
    return j;
}

inline ojson lattice_report(const SignedGraph& g) {
    Arrangement a = build_arrangement(g);
    std::vector<std::pair<Flat, Rank2Shape>> profile = rank2_profile(a);
    std::vector<Flat> lat = full_lattice(a);
    std::sort(lat.begin(), lat.end(), [](const Flat& x, const Flat& y) {
        return x.rank != y.rank ? x.rank < y.rank : x.members < y.members;
    });
    ojson arr = ojson::array();
    for (const auto& f : lat) {
        ojson row;
        row["members"] = f.members;
        row["rank"] = f.rank;
        row["m"] = f.multiplicity();
        row["dense"] = is_dense(a, f);
        row["shape"] = nullptr;
        for (const auto& [pf, shape] : profile)
            if (pf.members == f.members) { row["shape"] = to_string(shape); break; }
        arr.push_back(std::move(row));
    }
    return arr;
}

inline ojson certify_report(const SignedGraph& g, int d) {
    Arrangement a = build_arrangement(g);
    std::optional<int> cert = vanishing_certificate(a, d, 1);
    ojson j;
    j["d"] = d;
    j["k"] = 1;
    if (cert) {
        j["certificate"] = a.hyperplanes[*cert].origin.str();
        j["vanishes"] = "b_{q," + std::to_string(d) + "} = 0 for q <= 1";
    } else {
        j["certificate"] = nullptr;
        j["vanishes"] = "not certified";
    }
    return j;
}

inline ojson rank2_profile_json(const SignedGraph& g) {
    Arrangement a = build_arrangement(g);
    ojson arr = ojson::array();
    for (const auto& [f, shape] : rank2_profile(a)) {
        ojson row;
        row["members"] = f.members;
        row["m"] = f.multiplicity();
        row["shape"] = to_string(shape);
        arr.push_back(std::move(row));
    }
    return arr;
}

inline ojson analyze_report(const SignedGraph& g, bool cross_check = false, bool oracle = false) {
    Arrangement a = build_arrangement(g);
    ojson j;
    j["graph"] = graph_json(g);
    j["n"] = a.n();
    j["ambient_dim"] = a.ambient_dim;
    j["rank"] = a.rank;
    j["rank2_profile"] = rank2_profile_json(g);
    ojson b = beta_report(g, {}, cross_check, oracle);
    j["beta"] = b["beta"];
    CyclotomicDecomposition dec = h1_decomposition(a);
    j["decomposition"] = decomposition_json(dec);
    j["class"] = to_string(a.rank >= 3 ? classify_exceptional(g, cross_check)
                                       : ExceptionalClass::NotExceptional);
    j["formula"] = decomposition_formula(dec);
    return j;
}

} // namespace graphfiber
