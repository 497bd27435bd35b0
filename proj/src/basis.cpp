#include "pde/basis.hpp"

#include <algorithm>

#include <Eigen/Eigenvalues>

#include "pde/linalg.hpp"

namespace pde {

namespace {

void sign_rule(Vec& v) {
    for (int i = 0; i < v.size(); ++i) {
        if (std::abs(v[i]) > 1e-9) {
            if (v[i] < 0) v = -v;
            return;
        }
    }
}

// eigenvectors of L restricted to the span of W (orthonormal columns)
std::vector<std::pair<double, Vec>> restricted_eigen(const Mat& L, const Mat& W) {
    std::vector<std::pair<double, Vec>> out;
    if (W.cols() == 0) return out;
    Eigen::SelfAdjointEigenSolver<Mat> es(W.transpose() * L * W);
    for (int c = 0; c < W.cols(); ++c) {
        Vec v = W * es.eigenvectors().col(c);
        sign_rule(v);
        out.push_back({es.eigenvalues()[c], v});
    }
    return out;
}

}  // namespace

SymmetryAdaptedBasis symmetry_adapted_basis(const Mat& L, const SignedGroup& G,
                                            const SymmetryList& S,
                                            const IsotypicDecomposition& dec0,
                                            const std::vector<BifurcationArrow>& arrows) {
    const int n = static_cast<int>(L.rows());
    SymmetryAdaptedBasis out;
    struct Entry {
        double lambda;
        int comp;
        int intra;
        Vec v;
    };
    std::vector<Entry> entries;

    for (size_t c = 0; c < dec0.comps.size(); ++c) {
        const IsotypicComponent& comp = dec0.comps[c];
        if (comp.dim == 0) continue;

        const BifurcationArrow* arrow = nullptr;
        for (const auto& a : arrows)
            if (a.mother == 0 && a.comp == static_cast<int>(c)) {
                arrow = &a;
                break;
            }

        std::vector<Vec> accepted;
        std::vector<double> lambdas;
        auto admit = [&](const Vec& cand, double lam) {
            Vec r = cand;
            for (const Vec& b : accepted) r -= b.dot(r) * b;
            for (const Vec& b : accepted) r -= b.dot(r) * b;  // re-orthogonalize
            double nrm = r.norm();
            if (nrm < 1e-6) return;
            r /= nrm;
            sign_rule(r);
            accepted.push_back(r);
            lambdas.push_back(lam);
        };

        if (arrow) {
            FixSpace fj = fix_subspace(G, S.groups[arrow->daughter].gens);
            Mat W = subspace_intersection(fj.basis, comp.basis);
            auto seed = restricted_eigen(L, W);
            for (auto& [lam, v] : seed) admit(v, lam);
            // extend over the group orbit; the seed entered first and survives
            for (auto& [lam, v] : seed) {
                for (int g = 0; g < G.order() &&
                                static_cast<int>(accepted.size()) < comp.dim;
                     ++g)
                    admit(G.element(g).apply(v), lam);
            }
        }
        if (static_cast<int>(accepted.size()) != comp.dim) {
            // orbit does not span (or no arrow exists): plain eigenbasis
            if (arrow) out.orbit_fallback = true;
            accepted.clear();
            lambdas.clear();
            for (auto& [lam, v] : restricted_eigen(L, comp.basis)) {
                accepted.push_back(v);
                lambdas.push_back(lam);
            }
        }
        for (size_t t = 0; t < accepted.size(); ++t) {
            // snap to the Rayleigh quotient of the final vector
            double lam = accepted[t].dot(L * accepted[t]);
            entries.push_back({lam, static_cast<int>(c), static_cast<int>(t), accepted[t]});
        }
    }

    std::stable_sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
        if (a.lambda < b.lambda - 1e-8) return true;
        if (b.lambda < a.lambda - 1e-8) return false;
        return std::tie(a.comp, a.intra) < std::tie(b.comp, b.intra);
    });

    out.psi.resize(n, static_cast<int>(entries.size()));
    out.lambda.resize(static_cast<int>(entries.size()));
    for (size_t j = 0; j < entries.size(); ++j) {
        out.psi.col(static_cast<int>(j)) = entries[j].v;
        out.lambda[static_cast<int>(j)] = entries[j].lambda;
        out.comp_tag.push_back(entries[j].comp);
    }
    if (out.size() != n) throw numeric_error("symmetry-adapted basis does not span R^n");
    return out;
}

std::vector<ProjectionBasis> projection_bases(const SymmetryAdaptedBasis& basis,
                                              const std::vector<IsotypicDecomposition>& dec) {
    std::vector<ProjectionBasis> out;
    for (size_t i = 0; i < dec.size(); ++i) {
        for (size_t c = 0; c < dec[i].comps.size(); ++c) {
            ProjectionBasis pb;
            pb.subgroup = static_cast<int>(i);
            pb.comp = static_cast<int>(c);
            pb.coords = basis.psi.transpose() * dec[i].comps[c].basis;
            out.push_back(std::move(pb));
        }
    }
    return out;
}

}  // namespace pde
