#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "dsr/extremal.hpp"
#include "dsr/graph.hpp"
#include "dsr/random_graph.hpp"
#include "dsr/spectral.hpp"

using namespace dsr;

namespace {

Graph path3() { return join(Graph(1), disjoint_union(Graph(1), Graph(1))); }

double matrix_radius(const std::vector<std::vector<double>>& m) {
    return spectral_detail::power_iteration(
               static_cast<int>(m.size()), [&](int i, int j) { return m[i][j]; }, SpectralOptions{})
        .radius;
}

} // namespace

TEST_CASE("distance spectral radius of small graphs") {
    for (int n = 2; n <= 12; ++n) {
        auto r = distance_spectral_radius(complete_graph(n));
        CHECK(std::abs(r.radius - (n - 1)) <= 1e-10);
        CHECK(r.residual <= 1e-10);
    }
    // constant row sum 4
    CHECK(std::abs(distance_spectral_radius(cycle_graph(4)).radius - 4.0) <= 1e-10);
    // char poly of D(P_3) is l^3 - 6l - 4 = (l+2)(l^2-2l-2), Perron root 1+sqrt(3)
    CHECK(std::abs(distance_spectral_radius(path3()).radius - (1.0 + std::sqrt(3.0))) <= 1e-10);
}

TEST_CASE("quotient matrices of extremal graphs") {
    ExtremalParams pa{Family::A, 22, 1, 1};
    auto qa = quotient_matrix(all_pairs_distances(extremal_graph(pa)), extremal_partition(pa));
    REQUIRE(qa.t == 3);
    CHECK(qa.equitable);
    double expect_a[9] = {0, 19, 2, 1, 18, 4, 1, 38, 2};
    for (int i = 0; i < 9; ++i) CHECK(qa.entries[i] == expect_a[i]);

    ExtremalParams pb{Family::B, 17, 1, 2};
    auto qb = quotient_matrix(all_pairs_distances(extremal_graph(pb)), extremal_partition(pb));
    CHECK(qb.equitable);
    double expect_b[9] = {0, 13, 3, 1, 12, 6, 1, 26, 4};
    for (int i = 0; i < 9; ++i) CHECK(qb.entries[i] == expect_b[i]);

    // closed-form template must agree entry for entry
    auto ta = extremal_quotient(pa);
    auto tb = extremal_quotient(pb);
    for (int i = 0; i < 9; ++i) {
        CHECK(ta.entries[i] == expect_a[i]);
        CHECK(tb.entries[i] == expect_b[i]);
    }
}

TEST_CASE("quotient matrix of P_3 under endpoint/middle partition") {
    auto d = all_pairs_distances(path3());
    // center got label 0 from the join; endpoints are 1,2
    auto q = quotient_matrix(d, {{1, 2}, {0}});
    REQUIRE(q.t == 2);
    CHECK(q.equitable);
    CHECK(q.at(0, 0) == 2);
    CHECK(q.at(0, 1) == 1);
    CHECK(q.at(1, 0) == 2);
    CHECK(q.at(1, 1) == 0);
}

TEST_CASE("quotient partition validation") {
    auto d = all_pairs_distances(path3());
    CHECK_THROWS_AS(quotient_matrix(d, {{0, 1}, {1, 2}}), std::invalid_argument);
    CHECK_THROWS_AS(quotient_matrix(d, {{0, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(quotient_matrix(d, {{0, 1, 2}, {}}), std::invalid_argument);

    // a non-equitable partition is flagged, not rejected
    auto q = quotient_matrix(d, {{0, 1}, {2}});
    CHECK_FALSE(q.equitable);
}

TEST_CASE("extremal quotient row-sum algebra") {
    for (auto [n, s, k] : {std::tuple{22, 1, 1}, {50, 2, 1}, {40, 3, 4}}) {
        auto q = extremal_quotient({Family::A, n, s, k});
        CHECK(q.at(2, 0) + q.at(2, 1) + q.at(2, 2) == 2 * n - s - 2);
    }
}

TEST_CASE("characteristic cubics of the extremal families") {
    auto ca = cubic_coeffs_family_a(22, 1, 1);
    CHECK(ca == std::array<long long, 3>{-20, -137, -78});
    auto cb = cubic_coeffs_family_b(17, 1, 2);
    CHECK(cb == std::array<long long, 3>{-16, -124, -68});

    // c2 = -trace, c1 = sum of principal 2x2 minors, c0 = -det of the
    // quotient template, for both families
    for (auto p : {ExtremalParams{Family::A, 22, 1, 1}, {Family::A, 37, 2, 3},
                   {Family::B, 17, 1, 2}, {Family::B, 41, 3, 2}}) {
        CubicPoly closed = char_poly_family(p);
        CubicPoly from_matrix = char_poly_3x3(extremal_quotient(p));
        CHECK(closed.c2 == Catch::Approx(from_matrix.c2).epsilon(1e-12));
        CHECK(closed.c1 == Catch::Approx(from_matrix.c1).epsilon(1e-12));
        CHECK(closed.c0 == Catch::Approx(from_matrix.c0).epsilon(1e-12));
    }

    // the two published family-A forms agree at k=1
    for (int n = 10; n <= 200; n += 7)
        for (int s = 1; n - 2 * s - 1 >= 1 && s <= 20; ++s)
            CHECK(cubic_coeffs_family_a(n, s, 1) == cubic_coeffs_family_a_k1(n, s));

    // k=0 degenerates but stays evaluable
    auto c0 = cubic_coeffs_family_a(20, 2, 0);
    CHECK(c0[0] == -18);
}

TEST_CASE("largest real root") {
    // frozen from an independent bisection oracle
    CHECK(std::abs(largest_real_root({-20, -137, -78}, 21, 66) - 25.493855580645338) <= 1e-10);
    CHECK(std::abs(largest_real_root({-16, -124, -68}, 16, 51) - 21.824462727873886) <= 1e-10);
    // (x-1)^3, triple root
    CHECK(largest_real_root({-3, 3, -1}) == Catch::Approx(1.0).epsilon(1e-10));
    // x^3 + 1: single real root -1, right of no critical sign change
    CHECK(largest_real_root({0, 0, 1}) == Catch::Approx(-1.0).epsilon(1e-10));
    // x(x-2)(x+2)
    CHECK(largest_real_root({0, -4, 0}) == Catch::Approx(2.0).epsilon(1e-10));
}

TEST_CASE("Perron equality: char poly root vs full distance matrix") {
    for (auto p : {ExtremalParams{Family::A, 22, 1, 1}, {Family::A, 80, 3, 2},
                   {Family::B, 17, 1, 2}, {Family::B, 90, 2, 3}}) {
        double root = extremal_radius_by_root(p);
        double mu = distance_spectral_radius(extremal_graph(p)).radius;
        CHECK(std::abs(root - mu) <= 1e-8);
        CHECK(root > p.n - 1); // non-complete connected graph
    }
}

TEST_CASE("mu exceeds n-1 for connected non-complete graphs") {
    std::mt19937_64 rng(5);
    int done = 0;
    while (done < 60) {
        int n = 4 + static_cast<int>(rng() % 27);
        Graph g = random_min_degree_graph(n, 1, 0.4, rng());
        if (g.edge_count() == n * (n - 1) / 2) continue;
        ++done;
        CHECK(distance_spectral_radius(g).radius > n - 1 + 1e-9);
    }
}

TEST_CASE("matrix-order monotonicity under edge removal") {
    std::mt19937_64 rng(11);
    int done = 0;
    while (done < 100) {
        int n = 5 + static_cast<int>(rng() % 8);
        Graph g = random_min_degree_graph(n, 2, 0.5, rng());
        auto edges = g.edges();
        auto [u, v] = edges[rng() % edges.size()];
        g.remove_edge(u, v);
        if (!g.is_connected()) continue;
        ++done;
        Graph full = g;
        full.add_edge(u, v);
        DistanceMatrix da = all_pairs_distances(full);
        DistanceMatrix db = all_pairs_distances(g);
        bool grew = false;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                CHECK(db.at(i, j) >= da.at(i, j));
                if (db.at(i, j) > da.at(i, j)) grew = true;
            }
        CHECK(grew); // u,v went from distance 1 to >= 2
        CHECK(distance_spectral_radius(db).radius > distance_spectral_radius(da).radius);
    }
}

TEST_CASE("principal submatrix has smaller Perron root") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 50; ++trial) {
        int n = 6 + static_cast<int>(rng() % 8);
        Graph g = random_min_degree_graph(n, 1, 0.4, rng());
        DistanceMatrix d = all_pairs_distances(g);
        int m = 2 + static_cast<int>(rng() % (n - 2));
        std::vector<int> keep(n);
        std::iota(keep.begin(), keep.end(), 0);
        std::shuffle(keep.begin(), keep.end(), rng);
        keep.resize(m);
        std::vector<std::vector<double>> sub(m, std::vector<double>(m));
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j) sub[i][j] = d.at(keep[i], keep[j]);
        CHECK(matrix_radius(sub) < distance_spectral_radius(d).radius);
    }
}

TEST_CASE("convergence error carries the last estimate") {
    SpectralOptions strangled;
    strangled.max_iterations = 1;
    strangled.rayleigh_tol = 0.0;
    Graph g = extremal_graph({Family::A, 22, 1, 1});
    try {
        distance_spectral_radius(all_pairs_distances(g), strangled);
        FAIL("expected convergence_error");
    } catch (const convergence_error& e) {
        CHECK(e.last_estimate() > 0.0);
    }
}
