#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>
#include <random>

#include "graphfiber/arrangement.hpp"
#include "graphfiber/verify.hpp"

#include "helpers.hpp"
#include "oracles.hpp"

using namespace graphfiber;

TEST_CASE("build_arrangement: D3, braid K4, Boolean pair") {
    Arrangement d3 = build_arrangement(gftest::coxeter_d(3));
    CHECK(d3.n() == 6);
    CHECK(d3.ambient_dim == 3);
    CHECK(d3.rank == 3);

    Arrangement k4 = build_arrangement(gftest::complete_unsigned(4));
    CHECK(k4.n() == 6);
    CHECK(k4.ambient_dim == 4);
    CHECK(k4.rank == 3);

    Arrangement pair = build_arrangement(make_graph(2, {1, 2}, {}));
    CHECK(pair.n() == 2);
    CHECK(pair.rank == 2);

    CHECK_THROWS_AS(build_arrangement(SignedGraph{2, {}, {}}), input_error);
}

TEST_CASE("hyperplanes come in serialized order with matching normals") {
    SignedGraph g = make_graph(3, {2}, {{1, 3, 1}, {1, 2, -1}});
    Arrangement a = build_arrangement(g);
    REQUIRE(a.n() == 3);
    CHECK(a.hyperplanes[0].origin.str() == "loop(2)");
    CHECK(a.hyperplanes[0].normal == std::vector<long long>{0, 1, 0});
    CHECK(a.hyperplanes[1].origin.str() == "edge(1,2,-)");
    CHECK(a.hyperplanes[1].normal == std::vector<long long>{1, -1, 0});
    CHECK(a.hyperplanes[2].origin.str() == "edge(1,3,+)");
    CHECK(a.hyperplanes[2].normal == std::vector<long long>{1, 0, 1});
}

TEST_CASE("flats of D3 up to rank 2") {
    Arrangement a = build_arrangement(gftest::coxeter_d(3));
    auto fs = flats(a, 2);
    int rank1 = 0, m3 = 0, m2 = 0;
    for (const auto& f : fs) {
        if (f.rank == 1) ++rank1;
        else if (f.multiplicity() == 3) ++m3;
        else if (f.multiplicity() == 2) ++m2;
    }
    CHECK(rank1 == 6);
    // independent route: each m=3 flat holds exactly one dependent triple
    CHECK(m3 == gftest::dependent_triple_count(a));
    CHECK(m3 == 4);
    CHECK(m2 == 3);
    CHECK_THROWS_AS(flats(a, 0), input_error);
    CHECK_THROWS_AS(flats(a, 4), input_error);
}

TEST_CASE("flats: pencil and single hyperplane") {
    Arrangement pen = build_arrangement(gftest::pencil4());
    auto fs = flats(pen, 2);
    int rank2 = 0;
    for (const auto& f : fs)
        if (f.rank == 2) {
            ++rank2;
            CHECK(f.multiplicity() == 4);
        }
    CHECK(rank2 == 1);

    Arrangement one = build_arrangement(make_graph(1, {1}, {}));
    auto fs1 = flats(one, 1);
    REQUIRE(fs1.size() == 1);
    CHECK(fs1[0].members == std::vector<int>{0});
}

TEST_CASE("closure is idempotent") {
    std::mt19937 rng(5);
    for (int it = 0; it < 30; ++it) {
        Arrangement a = build_arrangement(random_graph(rng));
        std::uniform_int_distribution<int> hd(0, a.n() - 1);
        Flat f = closure(a, {hd(rng), hd(rng)});
        CHECK(closure(a, f.members).members == f.members);
    }
}

TEST_CASE("center holds every hyperplane") {
    for (const SignedGraph& g : {gftest::coxeter_d(3), gftest::complete_unsigned(4), make_graph(2, {1, 2}, {})}) {
        Arrangement a = build_arrangement(g);
        Flat c = center(a);
        CHECK((int)c.members.size() == a.n());
        CHECK(c.rank == a.rank);
    }
}

TEST_CASE("rank2_profile: D3 is four negative triangles and three double edges") {
    auto prof = rank2_profile(build_arrangement(gftest::coxeter_d(3)));
    std::map<Rank2Shape, int> hist;
    for (const auto& [f, s] : prof) ++hist[s];
    CHECK(hist[Rank2Shape::NegativeTriangle] == 4);
    CHECK(hist[Rank2Shape::DoubleEdge] == 3);
    CHECK(prof.size() == 7);
}

TEST_CASE("rank2_profile: pencil and loop-plus-disjoint-edge") {
    auto prof = rank2_profile(build_arrangement(gftest::pencil4()));
    REQUIRE(prof.size() == 1);
    CHECK(prof[0].second == Rank2Shape::FullPencil4);
    CHECK(prof[0].first.multiplicity() == 4);

    auto prof2 = rank2_profile(build_arrangement(make_graph(3, {1}, {{2, 3, -1}})));
    REQUIRE(prof2.size() == 1);
    CHECK(prof2[0].second == Rank2Shape::LoopDisjointEdge);
    CHECK(prof2[0].first.multiplicity() == 2);
}

TEST_CASE("rank2_profile covers every rank-2 flat exactly once") {
    std::mt19937 rng(17);
    for (int it = 0; it < 25; ++it) {
        Arrangement a = build_arrangement(random_graph(rng));
        auto prof = rank2_profile(a);
        CHECK(prof.size() == rank2_flats(a).size());
        long long pairs = 0;
        for (const auto& [f, s] : prof) {
            long long m = f.multiplicity();
            pairs += m * (m - 1) / 2;
        }
        long long n = a.n();
        CHECK(pairs == n * (n - 1) / 2);
    }
    CHECK_THROWS_AS(rank2_profile(arrangement_from_normals(2, {{1, 0}, {0, 1}})), input_error);
}

TEST_CASE("poincare polynomial: small closed forms") {
    CHECK(poincare_polynomial(build_arrangement(make_graph(1, {1}, {}))) == Polynomial({1, 1}));
    CHECK(poincare_polynomial(build_arrangement(make_graph(2, {1, 2}, {}))) == Polynomial({1, 2, 1}));
    Polynomial d3 = poincare_polynomial(build_arrangement(gftest::coxeter_d(3)));
    CHECK(d3 == Polynomial({1, 6, 11, 6}));
    CHECK(d3 == Polynomial({1, 1}) * Polynomial({1, 2}) * Polynomial({1, 3}));
}

TEST_CASE("poincare polynomial agrees with deletion-restriction") {
    std::mt19937 rng(23);
    std::vector<SignedGraph> cases = {gftest::coxeter_d(3), gftest::complete_unsigned(4), gftest::pencil4()};
    for (int it = 0; it < 5; ++it) cases.push_back(random_graph(rng, 1, 4));
    for (const auto& g : cases) {
        Arrangement a = build_arrangement(g);
        CHECK(poincare_polynomial(a) == gftest::poincare_oracle(a));
    }
}

TEST_CASE("poincare polynomial has degree rank and constant term 1") {
    std::mt19937 rng(31);
    for (int it = 0; it < 15; ++it) {
        Arrangement a = build_arrangement(random_graph(rng, 1, 4));
        Polynomial p = poincare_polynomial(a);
        CHECK(p.degree() == a.rank);
        CHECK(p.at(0) == 1);
        CHECK(p.at(1) == a.n()); // rank-1 flats are the hyperplanes
    }
}

TEST_CASE("density: rank-1 flats, multiplicity-2 flats, D3 triples") {
    Arrangement a = build_arrangement(gftest::coxeter_d(3));
    for (const auto& f : flats(a, 2)) {
        if (f.rank == 1) CHECK(is_dense(a, f));
        else CHECK(is_dense(a, f) == (f.multiplicity() >= 3));
    }
}

TEST_CASE("m_list: D3 and the Boolean triple") {
    Arrangement d3 = build_arrangement(gftest::coxeter_d(3));
    CHECK(m_list(d3, 2) == std::vector<int>{3, 3, 3, 3});

    Arrangement bool3 = build_arrangement(make_graph(3, {1, 2, 3}, {}));
    CHECK(m_list(bool3, 2).empty());
    CHECK_THROWS_AS(m_list(d3, 1), input_error);
    CHECK_THROWS_AS(m_list(d3, 9), input_error);
}

TEST_CASE("m_list with avoided hyperplane") {
    Arrangement d3 = build_arrangement(gftest::coxeter_d(3));
    for (int k = 0; k < d3.n(); ++k)
        CHECK(m_list(d3, 2, k) == std::vector<int>{3, 3}); // each hyperplane sits on 2 of 4 triples
}

TEST_CASE("graphic m-lists stay inside {3,4}") {
    std::mt19937 rng(29);
    for (int it = 0; it < 30; ++it) {
        Arrangement a = build_arrangement(random_graph(rng));
        if (a.rank < 2) continue;
        for (int m : m_list(a, 2)) CHECK((m == 3 || m == 4));
    }
}

TEST_CASE("full lattice cap") {
    // complete signed graph on 5 vertices has n = 20; with loops it exceeds the cap
    std::vector<SignedEdge> e;
    for (int i = 1; i <= 5; ++i)
        for (int j = i + 1; j <= 5; ++j) {
            e.push_back({i, j, -1});
            e.push_back({i, j, 1});
        }
    SignedGraph big = make_graph(5, {1}, e);
    CHECK_THROWS_AS(poincare_polynomial(build_arrangement(big)), input_error);
}
