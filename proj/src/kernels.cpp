#include "pde/kernels.hpp"

#include <cmath>

namespace pde::kernels {

namespace {

inline void forces_at(const Graph& g, const std::vector<double>& x, const std::vector<double>& y,
                      double eps, double nu, double D, int i, double& fxi, double& fyi) {
    const int n = g.vertex_count();
    double fx = 0.0, fy = 0.0;
    for (int j = 0; j < n; ++j) {
        if (j == i) continue;
        double dx = x[i] - x[j];
        double dy = y[i] - y[j];
        double r = std::sqrt(dx * dx + dy * dy);
        double rep = 1.0 / (eps + std::pow(r, D));
        fx += rep * dx;
        fy += rep * dy;
    }
    for (int j : g.neighbors(i)) {
        double dx = x[i] - x[j];
        double dy = y[i] - y[j];
        double r = std::sqrt(dx * dx + dy * dy);
        double spring = (r > 0.0) ? (nu - r) / r : 0.0;
        fx += spring * dx;
        fy += spring * dy;
    }
    fxi = fx;
    fyi = fy;
}

}  // namespace

void layout_forces_serial(const Graph& g, const std::vector<double>& x,
                          const std::vector<double>& y, double eps, double nu, double D,
                          std::vector<double>& fx, std::vector<double>& fy) {
    const int n = g.vertex_count();
    fx.assign(n, 0.0);
    fy.assign(n, 0.0);
    for (int i = 0; i < n; ++i) forces_at(g, x, y, eps, nu, D, i, fx[i], fy[i]);
}

void layout_forces(const Graph& g, const std::vector<double>& x, const std::vector<double>& y,
                   double eps, double nu, double D, std::vector<double>& fx,
                   std::vector<double>& fy) {
    const int n = g.vertex_count();
    fx.assign(n, 0.0);
    fy.assign(n, 0.0);
#pragma omp parallel for schedule(static)
    for (int i = 0; i < n; ++i) forces_at(g, x, y, eps, nu, D, i, fx[i], fy[i]);
}

namespace {

inline void hessian_row(const Vec& lambda, const Mat& psi, const Vec& fp, int j, Mat& h) {
    const int m = static_cast<int>(psi.cols());
    const int n = static_cast<int>(psi.rows());
    for (int k = j; k < m; ++k) {
        double acc = 0.0;
        for (int i = 0; i < n; ++i) acc += fp[i] * psi(i, j) * psi(i, k);
        h(j, k) = (j == k ? lambda[j] : 0.0) - acc;
    }
}

}  // namespace

void hessian_serial(const Vec& lambda, const Mat& psi, const Vec& fp, Mat& h) {
    const int m = static_cast<int>(psi.cols());
    h.resize(m, m);
    for (int j = 0; j < m; ++j) hessian_row(lambda, psi, fp, j, h);
    for (int j = 0; j < m; ++j)
        for (int k = 0; k < j; ++k) h(j, k) = h(k, j);
}

void hessian(const Vec& lambda, const Mat& psi, const Vec& fp, Mat& h) {
    const int m = static_cast<int>(psi.cols());
    h.resize(m, m);
#pragma omp parallel for schedule(static)
    for (int j = 0; j < m; ++j) hessian_row(lambda, psi, fp, j, h);
    for (int j = 0; j < m; ++j)
        for (int k = 0; k < j; ++k) h(j, k) = h(k, j);
}

namespace {

inline void accumulate_column(const std::vector<const SignedSymmetry*>& elems,
                              const std::vector<Complex>& weights, int col, CMat& out) {
    for (size_t e = 0; e < elems.size(); ++e)
        out(elems[e]->perm[col], col) += weights[e] * static_cast<double>(elems[e]->sign);
}

}  // namespace

void accumulate_signed_perms_serial(const std::vector<const SignedSymmetry*>& elems,
                                    const std::vector<Complex>& weights, CMat& out) {
    const int n = static_cast<int>(out.cols());
    out.setZero();
    for (int c = 0; c < n; ++c) accumulate_column(elems, weights, c, out);
}

void accumulate_signed_perms(const std::vector<const SignedSymmetry*>& elems,
                             const std::vector<Complex>& weights, CMat& out) {
    const int n = static_cast<int>(out.cols());
    out.setZero();
#pragma omp parallel for schedule(static)
    for (int c = 0; c < n; ++c) accumulate_column(elems, weights, c, out);
}

}  // namespace pde::kernels
