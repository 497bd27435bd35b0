#pragma once

#include <vector>

#include "pde/common.hpp"

namespace pde {

// A signed graph symmetry: vertex permutation pi together with a sign beta.
// Acts on u in R^n by (gamma . u)_i = beta * u_{pi^{-1}(i)}.
struct SignedSymmetry {
    std::vector<int> perm;  // image notation, perm[i] = pi(i), 0-based
    int sign = +1;

    int size() const { return static_cast<int>(perm.size()); }

    static SignedSymmetry identity(int n, int sign = +1) {
        SignedSymmetry g;
        g.perm.resize(n);
        for (int i = 0; i < n; ++i) g.perm[i] = i;
        g.sign = sign;
        return g;
    }

    // (g1 g2)(i) = g1(g2(i)); signs multiply.
    SignedSymmetry compose(const SignedSymmetry& other) const {
        SignedSymmetry r;
        r.perm.resize(perm.size());
        for (size_t i = 0; i < perm.size(); ++i) r.perm[i] = perm[other.perm[i]];
        r.sign = sign * other.sign;
        return r;
    }

    SignedSymmetry inverse() const {
        SignedSymmetry r;
        r.perm.resize(perm.size());
        for (size_t i = 0; i < perm.size(); ++i) r.perm[perm[i]] = static_cast<int>(i);
        r.sign = sign;
        return r;
    }

    bool is_identity() const {
        if (sign != +1) return false;
        for (size_t i = 0; i < perm.size(); ++i)
            if (perm[i] != static_cast<int>(i)) return false;
        return true;
    }

    bool operator==(const SignedSymmetry& o) const { return sign == o.sign && perm == o.perm; }
    bool operator<(const SignedSymmetry& o) const {
        if (sign != o.sign) return sign > o.sign;  // unsigned (+1) elements order first
        return perm < o.perm;
    }

    Vec apply(const Vec& u) const {
        Vec out(u.size());
        for (int i = 0; i < u.size(); ++i) out[perm[i]] = sign * u[i];
        return out;
    }

    Mat matrix() const {
        const int n = size();
        Mat M = Mat::Zero(n, n);
        for (int i = 0; i < n; ++i) M(perm[i], i) = sign;
        return M;
    }
};

}  // namespace pde
