#pragma once

#include <vector>

#include "pde/basis.hpp"
#include "pde/nonlinearity.hpp"

namespace pde {

struct GngaStats {
    long long tgnga_calls = 0, tgnga_iters = 0;
    long long cgnga_calls = 0, cgnga_iters = 0;
    long long secant_calls = 0, secant_iters = 0;
};

// Coefficient-space view of -Lu + f_s(u) = 0 in the eigenbasis.
struct Problem {
    const SymmetryAdaptedBasis* basis = nullptr;
    Nonlinearity f;

    int m() const { return basis->size(); }
    Vec vertex_values(const Vec& a) const { return basis->psi * a; }
};

// J_s(u) = 1/2 Lu.u - sum_i F_s(u_i), evaluated from the coefficients.
double action(const Problem& P, const Vec& a, double s);
// Direct form used by tests: 1/2 Lu.u - sum F_s(u_i).
double action_vertex(const Nonlinearity& f, const Mat& L, const Vec& u, double s);

// g_j = a_j lambda_j - f_s(u) . psi_j
Vec gradient_coeffs(const Problem& P, const Vec& a, double s);
// h_jk = lambda_j delta_jk - diag(f_s'(u)) psi_j . psi_k
Mat hessian_coeffs(const Problem& P, const Vec& a, double s);
// -a when f is of the form s*u + H(u), otherwise a central difference
Vec gradient_ds(const Problem& P, const Vec& a, double s);

struct SignatureInfo {
    int mi = 0;          // eigenvalues below -zero_tol
    double zero_tol = 0;
    Vec eigenvalues;     // ascending
    Mat eigenvectors;
    Mat critical_eigenspace() const;  // |eigenvalue| < zero_tol
};

SignatureInfo signature(const Mat& h);

struct NewtonOptions {
    double newton_tol = 1e-10;    // on ||g||_inf
    int max_iterations = 0;       // 0 = kernel default: 4 for tGNGA, 20 for cGNGA
    double step_max = 10.0;
    double escape_radius = 0.0;   // cGNGA only; 0 = disabled
};

struct NewtonResult {
    bool converged = false;
    Vec a;
    double s = 0;
    int iterations = 0;
    std::vector<double> residuals;  // ||g||_inf per check
    std::string failure;
};

// Newton on the bordered system with hyperplane constraint (p - p_g).v = 0.
NewtonResult tGNGA(const Problem& P, const Vec& a_guess, double s_guess, const Vec& v,
                   const NewtonOptions& opts = {}, GngaStats* stats = nullptr);

// Newton on the bordered system with the cylinder constraint
// ||P_E(a - a_star)|| = eps; E holds orthonormal columns.
NewtonResult cGNGA(const Problem& P, const Vec& a_star, double s_star, const Vec& a_guess,
                   double s_guess, const Mat& E, double eps, const NewtonOptions& opts = {},
                   GngaStats* stats = nullptr);

struct SecantResult {
    bool ok = false;
    Vec a;
    double s = 0;
    SignatureInfo sig;
    std::string failure;
};

// Locates the degenerate point between two consecutive solutions whose Morse
// indices differ; v is held fixed and beta is the r-th Hessian eigenvalue,
// r = mi_old + ceil((mi_new - mi_old)/2).
SecantResult secant(const Problem& P, const Vec& a_old, double s_old, int mi_old,
                    const Vec& a_new, double s_new, int mi_new, int max_outer = 30,
                    GngaStats* stats = nullptr);

}  // namespace pde
