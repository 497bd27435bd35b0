#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <set>

#include "pde/builtin_graphs.hpp"
#include "pde/cayley.hpp"
#include "pde/graph.hpp"
#include "pde/layout.hpp"
#include "pde/rng.hpp"
#include "pde/spectrum.hpp"

using namespace pde;

TEST_CASE("edgelist parsing") {
    Graph p3 = parse_edgelist("1 2\n2 3");
    CHECK(p3.vertex_count() == 3);
    CHECK(p3.edge_count() == 2);
    CHECK(p3.adjacent(0, 1));
    CHECK(p3.adjacent(1, 2));
    CHECK(!p3.adjacent(0, 2));

    Graph c4 = parse_edgelist("1 2\n2 3\n3 4\n4 1");
    CHECK(c4.vertex_count() == 4);
    CHECK(c4.edge_count() == 4);
    for (int i = 0; i < 4; ++i) CHECK(c4.degree(i) == 2);

    SUBCASE("comments and duplicates") {
        Graph g = parse_edgelist("# a path\n1 2\n2 3\n1 2\n");
        CHECK(g.edge_count() == 2);
    }
    SUBCASE("loop rejected") { CHECK_THROWS_AS(parse_edgelist("1 1"), Error); }
    SUBCASE("disconnected rejected") { CHECK_THROWS_AS(parse_edgelist("1 2\n3 4"), Error); }
    SUBCASE("non-integer token rejected") { CHECK_THROWS_AS(parse_edgelist("1 x"), Error); }
    SUBCASE("round trip") {
        CHECK(format_edgelist(p3) == "1 2\n2 3\n");
    }
}

TEST_CASE("laplacian") {
    Graph p3 = path_graph(3);
    Mat L = laplacian(p3);
    Mat expect(3, 3);
    expect << 1, -1, 0, -1, 2, -1, 0, -1, 1;
    CHECK((L - expect).cwiseAbs().maxCoeff() == 0.0);

    Graph c4 = cycle_graph(4);
    Mat Lc = laplacian(c4);
    for (int i = 0; i < 4; ++i) {
        CHECK(Lc(i, i) == 2.0);
        CHECK(Lc.row(i).sum() == 0.0);
    }

    SUBCASE("symmetry and quadratic form on random vectors") {
        Graph g = petersen_graph();
        Mat Lp = laplacian(g);
        CHECK((Lp - Lp.transpose()).cwiseAbs().maxCoeff() == 0.0);
        Rng rng(7);
        for (int t = 0; t < 100; ++t) {
            Vec x(10);
            for (int i = 0; i < 10; ++i) x[i] = rng.gaussian();
            double quad = x.dot(Lp * x);
            double direct = 0;
            for (auto [i, j] : g.edges()) direct += (x[i] - x[j]) * (x[i] - x[j]);
            CHECK(quad == doctest::Approx(direct).epsilon(1e-12));
            CHECK(quad >= -1e-12);
        }
    }
}

TEST_CASE("symmetric eigensolve") {
    SUBCASE("P3 spectrum {0,1,3}") {
        Spectrum s = symmetric_eigen(laplacian(path_graph(3)));
        CHECK(std::abs(s.values[0] - 0.0) < 1e-10);
        CHECK(std::abs(s.values[1] - 1.0) < 1e-10);
        CHECK(std::abs(s.values[2] - 3.0) < 1e-10);
    }
    SUBCASE("C4 spectrum {0,2,2,4}") {
        Spectrum s = symmetric_eigen(laplacian(cycle_graph(4)));
        Vec expect(4);
        expect << 0, 2, 2, 4;
        CHECK((s.values - expect).cwiseAbs().maxCoeff() < 1e-10);
    }
    SUBCASE("Petersen spectrum 0, 2^5, 5^4") {
        Spectrum s = symmetric_eigen(laplacian(petersen_graph()));
        CHECK(std::abs(s.values[0]) < 1e-10);
        for (int j = 1; j <= 5; ++j) CHECK(std::abs(s.values[j] - 2.0) < 1e-10);
        for (int j = 6; j <= 9; ++j) CHECK(std::abs(s.values[j] - 5.0) < 1e-10);
    }
    SUBCASE("reconstruction and orthonormality") {
        Mat L = laplacian(petersen_graph());
        Spectrum s = symmetric_eigen(L);
        Mat recon = s.vectors * s.values.asDiagonal() * s.vectors.transpose();
        CHECK((recon - L).cwiseAbs().maxCoeff() < 1e-8);
        Mat gram = s.vectors.transpose() * s.vectors;
        CHECK((gram - Mat::Identity(10, 10)).cwiseAbs().maxCoeff() < 1e-12);
    }
}

TEST_CASE("decorated Cayley graphs") {
    SUBCASE("Z5 gives 15 vertices") {
        DecoratedCayley dc = decorate_cayley(cyclic_group(5), {1});
        CHECK(dc.graph.vertex_count() == 15);
        CHECK(dc.aut_order == 5);
        CHECK(dc.verified);
    }
    SUBCASE("quaternion group gives 48 vertices and 72 edges") {
        DecoratedCayley dc = decorate_cayley(quaternion_group(), {2, 4});  // i and j
        CHECK(dc.graph.vertex_count() == 48);
        CHECK(dc.graph.edge_count() == 72);
        CHECK(dc.aut_order == 8);
        CHECK(dc.verified);
    }
    SUBCASE("S3 with two transpositions has automorphism group of order 6") {
        DecoratedCayley dc = decorate_cayley(symmetric_group_s3(), {2, 1});  // (12), (23)
        CHECK(dc.aut_order == 6);
        CHECK(dc.verified);
    }
    SUBCASE("non-generating set rejected") {
        CHECK_THROWS_AS(decorate_cayley(quaternion_group(), {1}), Error);  // <-1> is not Q
    }
}

TEST_CASE("spring layout") {
    SUBCASE("single edge equilibrium distance") {
        // 1-D force balance of the charge/spring model: the repulsion scales
        // the full separation vector, so d - 1 = d/(0.001 + d^1.1);
        // solved independently by bisection
        auto residual = [](double d) { return (d - 1.0) - d / (0.001 + std::pow(d, 1.1)); };
        double lo = 1.2, hi = 4.0;
        for (int it = 0; it < 200; ++it) {
            double mid = 0.5 * (lo + hi);
            (residual(mid) < 0 ? lo : hi) = mid;
        }
        double expect = 0.5 * (lo + hi);
        CHECK(expect == doctest::Approx(1.936).epsilon(0.01));

        Graph p2 = path_graph(2);
        LayoutResult lr = spring_layout(p2, 3, 11);
        REQUIRE(lr.best.size() == 2);
        double dx = lr.best.x[0] - lr.best.x[1];
        double dy = lr.best.y[0] - lr.best.y[1];
        CHECK(std::sqrt(dx * dx + dy * dy) == doctest::Approx(expect).epsilon(1e-4));
    }
    SUBCASE("coordinate count and complexity ordering") {
        Graph c4 = cycle_graph(4);
        LayoutResult lr = spring_layout(c4, 6, 3);
        CHECK(lr.best.size() == 4);
        for (const auto& alt : lr.alternates)
            if (alt.converged) CHECK(lr.best.complexity <= alt.complexity);
    }
    SUBCASE("deterministic for fixed seed") {
        Graph g = petersen_graph();
        LayoutResult a = spring_layout(g, 4, 9);
        LayoutResult b = spring_layout(g, 4, 9);
        CHECK(a.best.x == b.best.x);
        CHECK(a.best.y == b.best.y);
    }
    SUBCASE("most common edge slope is horizontal after rotation") {
        Graph g = cycle_graph(6);
        LayoutResult lr = spring_layout(g, 4, 5);
        int horizontal = 0, total = 0;
        for (auto [i, j] : g.edges()) {
            double ang = std::atan2(lr.best.y[j] - lr.best.y[i], lr.best.x[j] - lr.best.x[i]);
            double deg = std::fmod(std::abs(ang) * 180.0 / M_PI, 180.0);
            if (deg < 1.5 || deg > 178.5) ++horizontal;
            ++total;
        }
        CHECK(horizontal >= 1);  // the winning bucket was rotated onto the axis
    }
}
