#include "pde/character.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Eigenvalues>

#include "pde/rng.hpp"

namespace pde {

namespace {

double frobenius_schur_raw(const CharacterTable& ct, int k, const SignedGroup& G) {
    Complex acc = 0.0;
    for (const auto& cls : ct.classes)
        for (uint16_t g : cls) acc += ct.chi(k, ct.class_of[G.mult(g, g)]);
    return acc.real() / ct.group_order;
}

}  // namespace

CharacterTable character_table(const SignedGroup& G, const Bitset& members, uint64_t seed,
                               int retries) {
    CharacterTable ct;
    std::vector<int> elems = members.to_indices();
    ct.group_order = static_cast<int>(elems.size());
    if (ct.group_order == 0) throw structure_error("empty subgroup");

    // conjugacy classes within the subgroup
    ct.class_of.assign(G.order(), -1);
    for (int h : elems) {
        if (ct.class_of[h] >= 0) continue;
        int id = static_cast<int>(ct.classes.size());
        ct.classes.push_back({});
        for (int g : elems) {
            int x = G.conjugate(g, h);
            if (ct.class_of[x] < 0) {
                ct.class_of[x] = id;
                ct.classes[id].push_back(static_cast<uint16_t>(x));
            }
        }
        std::sort(ct.classes[id].begin(), ct.classes[id].end());
    }
    const int r = ct.class_count();
    const int identity_class = ct.class_of[0];

    // Right eigenvectors of a random combination M = sum_i c_i M_i of the
    // class-sum multiplication operators are simultaneous eigenvectors of
    // every M_i; the class-sum eigenvalues give the character values.
    Rng rng(seed);
    CMat vectors;
    bool ok = false;
    for (int attempt = 0; attempt < retries && !ok; ++attempt) {
        std::vector<Complex> coeff(r);
        for (int i = 0; i < r; ++i) coeff[i] = Complex(rng.uniform(-1, 1), rng.uniform(-1, 1));
        CMat M = CMat::Zero(r, r);
        for (int x : elems)
            for (int y : elems)
                M(ct.class_of[G.mult(x, y)], ct.class_of[y]) += coeff[ct.class_of[x]];
        for (int k = 0; k < r; ++k)
            M.row(k) /= static_cast<double>(ct.classes[k].size());

        Eigen::ComplexEigenSolver<CMat> es(M);
        if (es.info() != Eigen::Success) continue;
        // require well separated eigenvalues so eigenvectors are joint ones
        double scale = 1.0 + es.eigenvalues().cwiseAbs().maxCoeff();
        double sep = std::numeric_limits<double>::infinity();
        for (int a = 0; a < r; ++a)
            for (int b = a + 1; b < r; ++b)
                sep = std::min(sep, std::abs(es.eigenvalues()[a] - es.eigenvalues()[b]));
        if (r > 1 && sep < 1e-7 * scale) continue;
        vectors = es.eigenvectors();
        ok = true;
    }
    if (!ok)
        throw numeric_error("class-sum splitting failed after randomized retries");

    // recover class-sum eigenvalues per M_i, then character values
    ct.chi.resize(r, r);
    CMat raw(r, r);
    for (int v = 0; v < r; ++v) {
        CVec vec = vectors.col(v);
        int p = 0;
        for (int i = 1; i < r; ++i)
            if (std::abs(vec[i]) > std::abs(vec[p])) p = i;
        // omega_i = (M_i vec)[p] / vec[p], with
        // (M_i vec)[k] = (1/|C_k|) sum_{x in C_i, y in G} [class(xy)=k] vec[class(y)]
        CVec omega(r);
        for (int i = 0; i < r; ++i) {
            CVec out = CVec::Zero(r);
            for (uint16_t x : ct.classes[i])
                for (int y : elems) out[ct.class_of[G.mult(x, y)]] += vec[ct.class_of[y]];
            for (int k = 0; k < r; ++k) out[k] /= static_cast<double>(ct.classes[k].size());
            omega[i] = out[p] / vec[p];
        }
        double norm2 = 0.0;
        for (int i = 0; i < r; ++i)
            norm2 += std::norm(omega[i]) / static_cast<double>(ct.classes[i].size());
        double deg = std::sqrt(static_cast<double>(ct.group_order) / norm2);
        for (int i = 0; i < r; ++i)
            raw(v, i) = deg * omega[i] / static_cast<double>(ct.classes[i].size());
    }

    // canonical row order: trivial first, then by degree, then by value lex
    {
        std::vector<int> order(r);
        for (int i = 0; i < r; ++i) order[i] = i;
        auto key = [&](int v) {
            std::vector<std::pair<double, double>> vals;
            for (int i = 0; i < r; ++i)
                vals.push_back({std::round(raw(v, i).real() * 1e6) / 1e6,
                                std::round(raw(v, i).imag() * 1e6) / 1e6});
            return vals;
        };
        std::vector<std::vector<std::pair<double, double>>> keys(r);
        for (int v = 0; v < r; ++v) keys[v] = key(v);
        auto is_trivial = [&](int v) {
            for (int i = 0; i < r; ++i)
                if (std::abs(raw(v, i) - 1.0) > 1e-8) return false;
            return true;
        };
        std::sort(order.begin(), order.end(), [&](int a, int b) {
            bool ta = is_trivial(a), tb = is_trivial(b);
            if (ta != tb) return ta;
            long da = std::lround(raw(a, identity_class).real());
            long db = std::lround(raw(b, identity_class).real());
            if (da != db) return da < db;
            return keys[a] < keys[b];
        });
        for (int v = 0; v < r; ++v) ct.chi.row(v) = raw.row(order[v]);
    }

    ct.degrees.resize(r);
    for (int k = 0; k < r; ++k) {
        double d = ct.chi(k, identity_class).real();
        long rounded = std::lround(d);
        if (std::abs(d - rounded) > 1e-6 || rounded < 1)
            throw numeric_error("character degree " + std::to_string(d) + " is not a positive integer");
        ct.degrees[k] = static_cast<int>(rounded);
    }
    {
        long long sum = 0;
        for (int d : ct.degrees) sum += static_cast<long long>(d) * d;
        if (sum != ct.group_order)
            throw numeric_error("degree sum check failed for character table");
    }
    // row orthogonality
    for (int a = 0; a < r; ++a)
        for (int b = 0; b < r; ++b) {
            Complex acc = 0.0;
            for (int i = 0; i < r; ++i)
                acc += static_cast<double>(ct.classes[i].size()) * ct.chi(a, i) *
                       std::conj(ct.chi(b, i));
            acc /= static_cast<double>(ct.group_order);
            if (std::abs(acc - (a == b ? 1.0 : 0.0)) > 1e-8)
                throw numeric_error("character row orthogonality violated");
        }

    ct.trivial_k = -1;
    for (int k = 0; k < r && ct.trivial_k < 0; ++k) {
        bool triv = true;
        for (int i = 0; i < r && triv; ++i)
            if (std::abs(ct.chi(k, i) - 1.0) > 1e-8) triv = false;
        if (triv) ct.trivial_k = k;
    }
    if (ct.trivial_k < 0) throw numeric_error("trivial character missing from table");

    ct.conj_partner.assign(r, -1);
    for (int a = 0; a < r; ++a)
        for (int b = 0; b < r && ct.conj_partner[a] < 0; ++b) {
            bool match = true;
            for (int i = 0; i < r && match; ++i)
                if (std::abs(ct.chi(a, i) - std::conj(ct.chi(b, i))) > 1e-8) match = false;
            if (match) ct.conj_partner[a] = b;
        }
    for (int a = 0; a < r; ++a)
        if (ct.conj_partner[a] < 0) throw numeric_error("conjugate character pairing failed");

    ct.indicators.resize(r);
    for (int k = 0; k < r; ++k) ct.indicators[k] = frobenius_schur(ct, k, G);
    return ct;
}

int frobenius_schur(const CharacterTable& ct, int k, const SignedGroup& G) {
    double nu = frobenius_schur_raw(ct, k, G);
    long rounded = std::lround(nu);
    if (std::abs(nu - rounded) > 1e-6)
        throw numeric_error("Frobenius-Schur indicator " + std::to_string(nu) +
                            " is not close to an integer");
    if (rounded < -1 || rounded > 1)
        throw numeric_error("Frobenius-Schur indicator out of range");
    return static_cast<int>(rounded);
}

}  // namespace pde
