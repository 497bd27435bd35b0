#pragma once

#include <vector>

#include "pde/common.hpp"
#include "pde/graph.hpp"
#include "pde/signed_symmetry.hpp"

namespace pde::kernels {

// Data-parallel inner loops, each with a serial reference used by the tests
// and a benchmark target comparing the two.  The parallel versions split by
// output row/column so every entry is accumulated in the same order as the
// serial code and the results are bitwise identical.

// Charge/spring forces of the layout model (Q^2 = 1, eps, nu, D).
void layout_forces_serial(const Graph& g, const std::vector<double>& x,
                          const std::vector<double>& y, double eps, double nu, double D,
                          std::vector<double>& fx, std::vector<double>& fy);
void layout_forces(const Graph& g, const std::vector<double>& x, const std::vector<double>& y,
                   double eps, double nu, double D, std::vector<double>& fx,
                   std::vector<double>& fy);

// Galerkin Hessian h_jk = lambda_j delta_jk - sum_i fp_i Psi_ij Psi_ik.
void hessian_serial(const Vec& lambda, const Mat& psi, const Vec& fp, Mat& h);
void hessian(const Vec& lambda, const Mat& psi, const Vec& fp, Mat& h);

// Weighted sum of signed permutation matrices, P = sum_g w_g M_g.
void accumulate_signed_perms_serial(const std::vector<const SignedSymmetry*>& elems,
                                    const std::vector<Complex>& weights, CMat& out);
void accumulate_signed_perms(const std::vector<const SignedSymmetry*>& elems,
                             const std::vector<Complex>& weights, CMat& out);

}  // namespace pde::kernels
