#include "pde/isotypic.hpp"

#include <algorithm>

#include <Eigen/Eigenvalues>

#include "pde/kernels.hpp"

namespace pde {

namespace {

void apply_sign_rule(Mat& basis) {
    for (int c = 0; c < basis.cols(); ++c) {
        for (int i = 0; i < basis.rows(); ++i) {
            if (std::abs(basis(i, c)) > 1e-9) {
                if (basis(i, c) < 0) basis.col(c) = -basis.col(c);
                break;
            }
        }
    }
}

}  // namespace

IsotypicDecomposition isotypic_decomposition(const SignedGroup& G, const Bitset& members,
                                             const CharacterTable& ct) {
    const int n = G.degree();
    std::vector<int> elems = members.to_indices();
    std::vector<const SignedSymmetry*> perms;
    for (int e : elems) perms.push_back(&G.element(e));

    // does the subgroup contain -identity?
    int minus_one = -1;
    {
        SignedSymmetry m = SignedSymmetry::identity(n, -1);
        int idx = G.index_of(m);
        if (idx >= 0 && members.test(idx)) minus_one = idx;
    }

    IsotypicDecomposition out;
    const int r = ct.irreducible_count();
    for (int k = 0; k < r; ++k) {
        if (ct.conj_partner[k] < k) continue;  // one representative per conjugate pair
        IsotypicComponent comp;
        comp.char_k = k;
        comp.indicator = ct.indicators[k];
        comp.complex_degree = ct.degrees[k];
        comp.real_degree = comp.indicator == 1 ? ct.degrees[k] : 2 * ct.degrees[k];

        std::vector<Complex> w(elems.size());
        double scale = static_cast<double>(ct.degrees[k]) / ct.group_order;
        for (size_t e = 0; e < elems.size(); ++e)
            w[e] = scale * ct.chi(k, ct.class_of[elems[e]]);
        CMat Q(n, n);
        kernels::accumulate_signed_perms(perms, w, Q);
        Mat P;
        if (comp.indicator == 0) {
            P = 2.0 * Q.real();  // Q plus its conjugate-pair projection
        } else {
            if (Q.imag().cwiseAbs().maxCoeff() > 1e-9)
                throw numeric_error("projection of a real-type character has imaginary part");
            P = Q.real();
        }
        if ((P - P.transpose()).cwiseAbs().maxCoeff() > 1e-8)
            throw numeric_error("isotypic projection is not symmetric");
        if ((P * P - P).cwiseAbs().maxCoeff() > 1e-8)
            throw numeric_error("isotypic projection is not idempotent; table/action mismatch");
        comp.projector = 0.5 * (P + P.transpose());
        double tr = comp.projector.trace();
        comp.dim = static_cast<int>(std::lround(tr));
        if (std::abs(tr - comp.dim) > 1e-6)
            throw numeric_error("isotypic component dimension is not an integer");

        if (comp.dim > 0) {
            Eigen::SelfAdjointEigenSolver<Mat> es(comp.projector);
            comp.basis = es.eigenvectors().rightCols(comp.dim);
            apply_sign_rule(comp.basis);
        } else {
            comp.basis = Mat::Zero(n, 0);
        }
        out.comps.push_back(std::move(comp));
    }

    // completeness
    Mat sum = Mat::Zero(n, n);
    for (const auto& c : out.comps) sum += c.projector;
    if ((sum - Mat::Identity(n, n)).cwiseAbs().maxCoeff() > 1e-8)
        throw numeric_error("isotypic projections do not sum to the identity");

    // ordering: anti components first when -1 is present, else trivial first
    std::vector<int> order(out.comps.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    auto anti = [&](const IsotypicComponent& c) {
        if (minus_one < 0) return false;
        Complex v = ct.chi(c.char_k, ct.class_of[minus_one]);
        return std::abs(v + static_cast<double>(c.complex_degree)) < 1e-8;
    };
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        const auto& A = out.comps[a];
        const auto& B = out.comps[b];
        if (minus_one >= 0) {
            bool aa = anti(A), ab = anti(B);
            if (aa != ab) return aa;
        } else {
            bool ta = A.char_k == ct.trivial_k, tb = B.char_k == ct.trivial_k;
            if (ta != tb) return ta;
        }
        return false;  // keep character-table order otherwise
    });
    std::vector<IsotypicComponent> sorted;
    for (int i : order) sorted.push_back(std::move(out.comps[i]));
    out.comps = std::move(sorted);
    for (size_t i = 0; i < out.comps.size(); ++i)
        if (out.comps[i].char_k == ct.trivial_k) out.trivial_comp = static_cast<int>(i);
    return out;
}

}  // namespace pde
