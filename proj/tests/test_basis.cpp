#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "pde/builtin_graphs.hpp"
#include "pde/pipeline.hpp"
#include "pde/rng.hpp"

using namespace pde;

TEST_CASE("symmetry adapted basis on P3") {
    Preprocess pre = analyze(path_graph(3));
    const SymmetryAdaptedBasis& b = pre.basis;
    REQUIRE(b.size() == 3);

    SUBCASE("matches the hand eigenvectors up to sign") {
        Mat expect(3, 3);
        expect << 1 / std::sqrt(3.0), 1 / std::sqrt(2.0), 1 / std::sqrt(6.0),
                  1 / std::sqrt(3.0), 0.0,                -2 / std::sqrt(6.0),
                  1 / std::sqrt(3.0), -1 / std::sqrt(2.0), 1 / std::sqrt(6.0);
        CHECK((b.psi - expect).cwiseAbs().maxCoeff() < 1e-10);
        CHECK(b.lambda[0] == doctest::Approx(0.0).scale(1).epsilon(1e-12));
        CHECK(b.lambda[1] == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(b.lambda[2] == doctest::Approx(3.0).epsilon(1e-12));
    }
    SUBCASE("diagonalizes L") {
        Mat D = b.psi.transpose() * pre.L * b.psi;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                if (i != j) CHECK(std::abs(D(i, j)) < 1e-8);
    }
    SUBCASE("each vector lies in a single isotypic component") {
        for (int j = 0; j < b.size(); ++j) {
            const Mat& P = pre.dec[0].comps[b.comp_tag[j]].projector;
            CHECK((P * b.psi.col(j) - b.psi.col(j)).norm() < 1e-9);
        }
    }
}

TEST_CASE("symmetry adapted basis on Petersen") {
    Preprocess pre = analyze(petersen_graph());
    const SymmetryAdaptedBasis& b = pre.basis;
    REQUIRE(b.size() == 10);
    int mult2 = 0, mult5 = 0;
    for (int j = 0; j < 10; ++j) {
        if (std::abs(b.lambda[j] - 2.0) < 1e-8) ++mult2;
        if (std::abs(b.lambda[j] - 5.0) < 1e-8) ++mult5;
    }
    CHECK(mult2 == 5);
    CHECK(mult5 == 4);
    SUBCASE("orthonormal and eigen residuals") {
        Mat gram = b.psi.transpose() * b.psi;
        CHECK((gram - Mat::Identity(10, 10)).cwiseAbs().maxCoeff() < 1e-12);
        for (int j = 0; j < 10; ++j)
            CHECK((pre.L * b.psi.col(j) - b.lambda[j] * b.psi.col(j)).norm() <
                  1e-10 * std::max(1.0, b.lambda[j]));
    }
    SUBCASE("sign convention: first nonzero coordinate positive") {
        for (int j = 0; j < 10; ++j) {
            for (int i = 0; i < 10; ++i) {
                if (std::abs(b.psi(i, j)) > 1e-9) {
                    CHECK(b.psi(i, j) > 0);
                    break;
                }
            }
        }
    }
}

TEST_CASE("change of basis consistency") {
    Preprocess pre = analyze(builtin_graph("cayley-z5"));
    Rng rng(21);
    for (int t = 0; t < 20; ++t) {
        Vec u(15);
        for (int i = 0; i < 15; ++i) u[i] = rng.gaussian();
        Vec a = pre.basis.psi.transpose() * u;
        CHECK((pre.basis.psi * a - u).cwiseAbs().maxCoeff() < 1e-12);
    }
}

TEST_CASE("projection bases in eigen coordinates") {
    Preprocess pre = analyze(builtin_graph("cayley-z5"));
    auto proj = projection_bases(pre.basis, pre.dec);

    SUBCASE("orthonormal columns and per-subgroup completeness") {
        std::vector<int> dim_sum(pre.S.groups.size(), 0);
        for (const auto& pb : proj) {
            if (pb.coords.cols() == 0) continue;
            Mat gram = pb.coords.transpose() * pb.coords;
            CHECK((gram - Mat::Identity(pb.coords.cols(), pb.coords.cols())).cwiseAbs().maxCoeff() <
                  1e-10);
            dim_sum[pb.subgroup] += static_cast<int>(pb.coords.cols());
        }
        for (int d : dim_sum) CHECK(d == 15);
    }
    SUBCASE("Z10 component dims 3 6 6") {
        std::vector<int> dims;
        for (const auto& pb : proj)
            if (pb.subgroup == 0 && pb.coords.cols() > 0)
                dims.push_back(static_cast<int>(pb.coords.cols()));
        std::sort(dims.begin(), dims.end());
        CHECK(dims == std::vector<int>{3, 6, 6});
    }
    SUBCASE("projectors stay idempotent in eigen coordinates") {
        for (size_t i = 0; i < pre.dec.size(); ++i)
            for (const auto& comp : pre.dec[i].comps) {
                if (comp.dim == 0) continue;
                Mat P_psi = pre.basis.psi.transpose() * comp.projector * pre.basis.psi;
                CHECK((P_psi * P_psi - P_psi).cwiseAbs().maxCoeff() < 1e-8);
                CHECK((P_psi - P_psi.transpose()).cwiseAbs().maxCoeff() < 1e-8);
            }
    }
    SUBCASE("trivial subgroup has a single full component") {
        int trivial = -1;
        for (size_t i = 0; i < pre.S.groups.size(); ++i)
            if (pre.S.groups[i].order == 1) trivial = static_cast<int>(i);
        REQUIRE(trivial >= 0);
        int nonzero = 0;
        for (const auto& pb : proj)
            if (pb.subgroup == trivial && pb.coords.cols() > 0) {
                ++nonzero;
                CHECK(pb.coords.cols() == 15);
            }
        CHECK(nonzero == 1);
    }
}

TEST_CASE("degenerate clusters keep single component tags") {
    // C4 has a double eigenvalue split across two components? no: the lambda=2
    // eigenspace is one 2-dim component, but S3's decorated graph has a triple
    // eigenvalue 3 spanning two components of S3xZ2
    Preprocess pre = analyze(builtin_graph("cayley-s3"));
    const auto& b = pre.basis;
    int triple = 0;
    for (int j = 0; j < b.size(); ++j)
        if (std::abs(b.lambda[j] - 3.0) < 1e-8) ++triple;
    CHECK(triple == 3);
    std::set<int> tags;
    for (int j = 0; j < b.size(); ++j)
        if (std::abs(b.lambda[j] - 3.0) < 1e-8) tags.insert(b.comp_tag[j]);
    CHECK(tags.size() == 2);  // a 1-dim and a 2-dim irreducible share lambda=3
}
