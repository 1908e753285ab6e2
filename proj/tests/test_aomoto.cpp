#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "graphfiber/aomoto.hpp"
#include "graphfiber/verify.hpp"

#include "helpers.hpp"

using namespace graphfiber;

namespace {

Flat some_triple_flat(const Arrangement& a) {
    for (const Flat& f : rank2_flats(a))
        if (f.multiplicity() == 3) return f;
    REQUIRE(false);
    return {};
}

// membership of w in the span of the basis vectors, over the given field
template <class F>
bool in_span(const F& f, const std::vector<Weights<F>>& basis, const Weights<F>& w) {
    int ncols = (int)w.size();
    std::vector<std::vector<typename F::Elem>> rows = basis;
    int r0 = matrix_rank(f, rows, ncols);
    rows.push_back(w);
    return matrix_rank(f, rows, ncols) == r0;
}

} // namespace

TEST_CASE("sigma over triple flats and the center of D3") {
    Arrangement d3 = build_arrangement(gftest::coxeter_d(3));
    Flat triple = some_triple_flat(d3);

    PrimeField f3(3);
    CHECK(sigma(d3, f3, all_ones(d3, f3), triple) == 0);

    RationalField q;
    Weights<RationalField> third(d3.n(), Rat(1, 3));
    CHECK(sigma(d3, q, third, triple) == Rat(1));
    CHECK(sigma(d3, q, third, center(d3)) == Rat(2));

    Weights<RationalField> wrong(2, Rat(1));
    CHECK_THROWS_AS(sigma(d3, q, wrong, triple), input_error);
}

TEST_CASE("cocycle space dimensions: D3 over F3, K3 over F2") {
    Arrangement d3 = build_arrangement(gftest::coxeter_d(3));
    PrimeField f3(3);
    CHECK(cocycle_space(d3, f3, all_ones(d3, f3)).size() == 2);

    Arrangement k3 = build_arrangement(gftest::complete_unsigned(3));
    PrimeField f2(2);
    auto basis = cocycle_space(k3, f2, all_ones(k3, f2));
    REQUIRE(basis.size() == 1);
    CHECK(basis[0] == Weights<PrimeField>(3, basis[0][0])); // constants only

    CHECK_THROWS_AS(cocycle_space(k3, f2, Weights<PrimeField>(3, 0)), input_error);
}

TEST_CASE("the weight vector itself is always a cocycle") {
    std::mt19937 rng(41);
    for (int it = 0; it < 25; ++it) {
        Arrangement a = build_arrangement(random_graph(rng));
        PrimeField f(5);
        Weights<PrimeField> w(a.n());
        bool nonzero = false;
        std::uniform_int_distribution<long long> cd(0, 4);
        for (auto& x : w) {
            x = cd(rng);
            nonzero |= (x != 0);
        }
        if (!nonzero) continue;
        CHECK(in_span(f, cocycle_space(a, f, w), w));
    }
}

TEST_CASE("beta1 on the named instances") {
    Arrangement d3 = build_arrangement(gftest::coxeter_d(3));
    PrimeField f3(3), f2(2);
    CHECK(beta1(d3, f3, all_ones(d3, f3)) == 1);
    CHECK(beta1(d3, f2, all_ones(d3, f2)) == 0);

    Arrangement pen = build_arrangement(gftest::pencil4());
    CHECK(beta1(pen, f2, all_ones(pen, f2)) == 2);
}

TEST_CASE("beta_p on D4, K4, K4 minus an edge") {
    CHECK(beta_p(build_arrangement(gftest::coxeter_d(4)), 3) == 1);
    CHECK(beta_p(build_arrangement(gftest::complete_unsigned(4)), 5) == 0);

    Arrangement k4e = build_arrangement(gftest::k4_minus_edge());
    CHECK(beta_p(k4e, 3) == 0);
    CHECK(brute_force_beta_p(k4e, 3) == 0); // 3^5 vectors

    CHECK_THROWS_AS(beta_p(k4e, 4), input_error);
}

TEST_CASE("os2 matrix route agrees with the flat-local route") {
    Arrangement d3 = build_arrangement(gftest::coxeter_d(3));
    PrimeField f3(3), f2(2);
    CHECK(os2_matrix_beta(d3, f3, all_ones(d3, f3)) == 1);

    Arrangement pen = build_arrangement(gftest::pencil4());
    CHECK(os2_matrix_beta(pen, f2, all_ones(pen, f2)) == 2);

    int compared = 0;
    for (const SignedGraph& g : enumerate_graphs(4)) {
        if (compared >= 50) break;
        Arrangement a = build_arrangement(g);
        for (long long p : {2LL, 3LL, 5LL}) {
            PrimeField f(p);
            CHECK(os2_matrix_beta(a, f, all_ones(a, f)) == beta_p(a, p));
        }
        ++compared;
    }
}

TEST_CASE("os2 agrees over the rationals with a generic weight") {
    Arrangement d3 = build_arrangement(gftest::coxeter_d(3));
    RationalField q;
    Weights<RationalField> w;
    for (int h = 0; h < d3.n(); ++h) w.push_back(Rat(h + 1, 7));
    CHECK(os2_matrix_beta(d3, q, w) == beta1(d3, q, w));
}

TEST_CASE("brute force oracle on the named instances") {
    CHECK(brute_force_beta_p(build_arrangement(gftest::coxeter_d(3)), 3) == 1);
    CHECK(brute_force_beta_p(build_arrangement(gftest::complete_unsigned(3)), 3) == 1);

    Arrangement path2 = build_arrangement(make_graph(3, {}, {{1, 2, -1}, {2, 3, -1}}));
    CHECK(brute_force_beta_p(path2, 2) == 0);

    // cap: 2^24 > 10^7
    std::vector<SignedEdge> e;
    for (int i = 1; i <= 4; ++i)
        for (int j = i + 1; j <= 4; ++j) {
            e.push_back({i, j, -1});
            e.push_back({i, j, 1});
        }
    SignedGraph big = make_graph(4, {1, 2, 3, 4}, e); // n = 16
    Arrangement a16 = build_arrangement(big);
    CHECK_THROWS_AS(brute_force_beta_p(a16, 5), input_error);
}

TEST_CASE("rational all-ones weight never has degree-1 cohomology") {
    std::mt19937 rng(43);
    RationalField q;
    std::vector<SignedGraph> cases = {gftest::coxeter_d(3), gftest::pencil4(), gftest::complete_unsigned(4)};
    for (int it = 0; it < 20; ++it) cases.push_back(random_graph(rng));
    for (const auto& g : cases) {
        Arrangement a = build_arrangement(g);
        CHECK(beta1(a, q, Weights<RationalField>(a.n(), Rat(1))) == 0);
    }
}

TEST_CASE("beta_p vanishes exactly when cocycles are the constants") {
    std::mt19937 rng(47);
    for (int it = 0; it < 25; ++it) {
        Arrangement a = build_arrangement(random_graph(rng));
        for (long long p : {2LL, 3LL}) {
            PrimeField f(p);
            auto basis = cocycle_space(a, f, all_ones(a, f));
            bool zero_beta = ((int)basis.size() - 1 == 0);
            bool constants_only =
                basis.size() == 1 && basis[0] == Weights<PrimeField>(a.n(), basis[0][0]);
            CHECK(zero_beta == constants_only);
        }
    }
}

TEST_CASE("rank-2 closed form over direct pencils") {
    for (int n = 3; n <= 8; ++n) {
        std::vector<std::vector<long long>> normals{{0, 1}};
        for (int k = 0; k + 1 < n; ++k) normals.push_back({1, k});
        Arrangement a = arrangement_from_normals(2, normals);
        REQUIRE(a.rank == 2);
        for (long long p : {2LL, 3LL, 5LL, 7LL})
            CHECK(beta_p(a, p) == (n % p == 0 ? n - 2 : 0));
    }
}

TEST_CASE("beta_p is invariant under switching and relabeling") {
    std::mt19937 rng(53);
    for (int it = 0; it < 30; ++it) {
        SignedGraph g = random_graph(rng);
        SignedGraph h = random_transform(rng, g);
        for (long long p : {2LL, 3LL, 5LL})
            CHECK(beta_p(build_arrangement(g), p) == beta_p(build_arrangement(h), p));
    }
}
