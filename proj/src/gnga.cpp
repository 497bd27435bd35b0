#include "pde/gnga.hpp"

#include <Eigen/Eigenvalues>

#include "pde/kernels.hpp"
#include "pde/linalg.hpp"

namespace pde {

double action(const Problem& P, const Vec& a, double s) {
    Vec u = P.vertex_values(a);
    double quad = 0.0;
    for (int j = 0; j < P.m(); ++j) quad += P.basis->lambda[j] * a[j] * a[j];
    double pot = 0.0;
    for (int i = 0; i < u.size(); ++i) pot += P.f.F(s, u[i]);
    return 0.5 * quad - pot;
}

double action_vertex(const Nonlinearity& f, const Mat& L, const Vec& u, double s) {
    double pot = 0.0;
    for (int i = 0; i < u.size(); ++i) pot += f.F(s, u[i]);
    return 0.5 * u.dot(L * u) - pot;
}

Vec gradient_coeffs(const Problem& P, const Vec& a, double s) {
    Vec u = P.vertex_values(a);
    Vec fu(u.size());
    for (int i = 0; i < u.size(); ++i) fu[i] = P.f.f(s, u[i]);
    Vec g = P.basis->lambda.cwiseProduct(a) - P.basis->psi.transpose() * fu;
    return g;
}

Mat hessian_coeffs(const Problem& P, const Vec& a, double s) {
    Vec u = P.vertex_values(a);
    Vec fp(u.size());
    for (int i = 0; i < u.size(); ++i) fp[i] = P.f.fp(s, u[i]);
    Mat h;
    kernels::hessian(P.basis->lambda, P.basis->psi, fp, h);
    return h;
}

Vec gradient_ds(const Problem& P, const Vec& a, double s) {
    if (P.f.unit_linear_in_s()) return -a;
    double step = 1e-6 * std::max(1.0, std::abs(s));
    return (gradient_coeffs(P, a, s + step) - gradient_coeffs(P, a, s - step)) / (2.0 * step);
}

SignatureInfo signature(const Mat& h) {
    Eigen::SelfAdjointEigenSolver<Mat> es(h);
    SignatureInfo out;
    out.eigenvalues = es.eigenvalues();
    out.eigenvectors = es.eigenvectors();
    double hmax = h.cwiseAbs().maxCoeff();
    out.zero_tol = 1e-6 * std::max(1.0, hmax);
    out.mi = 0;
    for (int i = 0; i < out.eigenvalues.size(); ++i)
        if (out.eigenvalues[i] < -out.zero_tol) ++out.mi;
    return out;
}

Mat SignatureInfo::critical_eigenspace() const {
    int count = 0;
    for (int i = 0; i < eigenvalues.size(); ++i)
        if (std::abs(eigenvalues[i]) < zero_tol) ++count;
    Mat E(eigenvectors.rows(), count);
    int c = 0;
    for (int i = 0; i < eigenvalues.size(); ++i)
        if (std::abs(eigenvalues[i]) < zero_tol) E.col(c++) = eigenvectors.col(i);
    return E;
}

namespace {

// One bordered Newton iteration loop shared by tGNGA and cGNGA.  The
// constraint callback fills kappa and the bottom row of the system.
template <typename Constraint>
NewtonResult bordered_newton(const Problem& P, Vec a, double s, int max_iterations,
                             const NewtonOptions& opts, Constraint&& constraint,
                             long long* iter_counter) {
    const int m = P.m();
    NewtonResult out;
    Mat A(m + 1, m + 1);
    Vec rhs(m + 1);
    for (int it = 0;; ++it) {
        Vec g = gradient_coeffs(P, a, s);
        Vec bottom(m + 1);
        double kappa = constraint(a, s, bottom);
        double gnorm = g.lpNorm<Eigen::Infinity>();
        out.residuals.push_back(gnorm);
        if (gnorm <= opts.newton_tol && std::abs(kappa) <= 1e-10) {
            out.converged = true;
            out.a = a;
            out.s = s;
            out.iterations = it;
            return out;
        }
        if (it >= max_iterations) {
            out.failure = "iteration cap reached";
            out.a = a;
            out.s = s;
            out.iterations = it;
            return out;
        }
        A.topLeftCorner(m, m) = hessian_coeffs(P, a, s);
        A.topRightCorner(m, 1) = gradient_ds(P, a, s);
        A.bottomRows(1) = bottom.transpose();
        rhs.head(m) = g;
        rhs[m] = kappa;
        Vec chi = min_norm_solve(A, rhs);
        if (iter_counter) ++*iter_counter;
        if (chi.norm() > opts.step_max) {
            out.failure = "step norm explosion";
            out.a = a;
            out.s = s;
            out.iterations = it + 1;
            return out;
        }
        a -= chi.head(m);
        s -= chi[m];
    }
}

}  // namespace

NewtonResult tGNGA(const Problem& P, const Vec& a_guess, double s_guess, const Vec& v,
                   const NewtonOptions& opts, GngaStats* stats) {
    if (stats) ++stats->tgnga_calls;
    const int m = P.m();
    Vec va = v.head(m);
    double vs = v[m];
    const int cap = opts.max_iterations > 0 ? opts.max_iterations : 4;
    NewtonResult res = bordered_newton(
        P, a_guess, s_guess, cap, opts,
        [&](const Vec& a, double s, Vec& bottom) {
            bottom.head(m) = va;
            bottom[m] = vs;
            return (a - a_guess).dot(va) + (s - s_guess) * vs;
        },
        stats ? &stats->tgnga_iters : nullptr);
    return res;
}

NewtonResult cGNGA(const Problem& P, const Vec& a_star, double s_star, const Vec& a_guess,
                   double s_guess, const Mat& E, double eps, const NewtonOptions& opts,
                   GngaStats* stats) {
    if (stats) ++stats->cgnga_calls;
    const int m = P.m();
    NewtonOptions o = opts;
    const int cap = o.max_iterations > 0 ? o.max_iterations : 20;
    NewtonResult res = bordered_newton(
        P, a_guess, s_guess, cap, o,
        [&](const Vec& a, double s, Vec& bottom) {
            (void)s;
            Vec proj = E * (E.transpose() * (a - a_star));
            bottom.head(m) = proj;
            bottom[m] = 0.0;
            return 0.5 * (proj.squaredNorm() - eps * eps);
        },
        stats ? &stats->cgnga_iters : nullptr);
    if (res.converged && o.escape_radius > 0.0) {
        double dist = std::sqrt((res.a - a_star).squaredNorm() + (res.s - s_star) * (res.s - s_star));
        if (dist > o.escape_radius) {
            res.converged = false;
            res.failure = "converged outside the escape radius";
        }
    }
    return res;
}

SecantResult secant(const Problem& P, const Vec& a_old, double s_old, int mi_old,
                    const Vec& a_new, double s_new, int mi_new, int max_outer,
                    GngaStats* stats) {
    if (stats) ++stats->secant_calls;
    SecantResult out;
    const int m = P.m();
    const int d = mi_new - mi_old;
    if (d == 0) {
        out.failure = "no Morse index change";
        return out;
    }
    // r-th eigenvalue crosses zero; 1-based r = mi_old + ceil(d/2)
    const int r = mi_old + (d > 0 ? (d + 1) / 2 : -((-d) / 2));
    Vec p_old(m + 1), p_new(m + 1);
    p_old << a_old, s_old;
    p_new << a_new, s_new;
    Vec v = (p_new - p_old).normalized();
    const double span = (p_new - p_old).norm();

    auto beta_at = [&](const Vec& a, double s, SignatureInfo& sig) {
        sig = signature(hessian_coeffs(P, a, s));
        return sig.eigenvalues[r - 1];
    };

    SignatureInfo sig;
    double xi_lo = 0.0, xi_hi = span;
    double beta_lo = beta_at(a_old, s_old, sig);
    double beta_hi = beta_at(a_new, s_new, sig);
    double xi_prev = xi_lo, beta_prev = beta_lo;
    double xi_cur = xi_hi, beta_cur = beta_hi;

    for (int it = 0; it < max_outer; ++it) {
        if (stats) ++stats->secant_iters;
        double xi;
        double denom = beta_cur - beta_prev;
        if (std::abs(denom) < 1e-300) {
            xi = 0.5 * (xi_lo + xi_hi);  // bisection fallback
        } else {
            xi = xi_cur - (xi_cur - xi_prev) * beta_cur / denom;
            if (!(xi > xi_lo && xi < xi_hi)) xi = 0.5 * (xi_lo + xi_hi);
        }
        Vec guess = p_old + xi * v;
        NewtonOptions o;
        NewtonResult step = tGNGA(P, guess.head(m), guess[m], v, o, stats);
        if (!step.converged) {
            // retry from the bracket midpoint once, then give up
            xi = 0.5 * (xi_lo + xi_hi);
            guess = p_old + xi * v;
            step = tGNGA(P, guess.head(m), guess[m], v, o, stats);
            if (!step.converged) {
                out.failure = "projection tGNGA failed inside the bracket";
                return out;
            }
        }
        double beta = beta_at(step.a, step.s, sig);
        if (std::abs(beta) < sig.zero_tol) {
            out.ok = true;
            out.a = step.a;
            out.s = step.s;
            out.sig = sig;
            return out;
        }
        if ((beta < 0) == (beta_lo < 0)) {
            xi_lo = xi;
            beta_lo = beta;
        } else {
            xi_hi = xi;
            beta_hi = beta;
        }
        xi_prev = xi_cur;
        beta_prev = beta_cur;
        xi_cur = xi;
        beta_cur = beta;
    }
    out.failure = "secant did not converge within the outer iteration cap";
    return out;
}

}  // namespace pde
