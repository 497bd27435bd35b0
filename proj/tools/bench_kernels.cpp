// Timing comparison of the serial reference kernels against the OpenMP
// versions, on layout forces, Hessian assembly and projector accumulation.

#include <chrono>
#include <cstdio>
#include <vector>

#include <omp.h>

#include "pde/builtin_graphs.hpp"
#include "pde/kernels.hpp"
#include "pde/rng.hpp"
#include "pde/symmetry_group.hpp"

using namespace pde;

namespace {

double now() {
    return std::chrono::duration<double>(std::chrono::steady_clock::now().time_since_epoch())
        .count();
}

template <typename F>
double time_best_of(int reps, F&& fn) {
    double best = 1e300;
    for (int r = 0; r < reps; ++r) {
        double t0 = now();
        fn();
        best = std::min(best, now() - t0);
    }
    return best;
}

void report(const char* name, double serial, double parallel) {
    std::printf("%-28s serial %10.3f ms   omp %10.3f ms   speedup %.2fx\n", name, serial * 1e3,
                parallel * 1e3, serial / parallel);
}

}  // namespace

int main(int argc, char** argv) {
    int reps = argc > 1 ? std::atoi(argv[1]) : 5;
    std::printf("threads: %d\n", omp_get_max_threads());
    Rng rng(42);

    {
        Graph g = truncated_icosahedron_graph();
        const int n = g.vertex_count();
        std::vector<double> x(n), y(n), fx, fy, fx2, fy2;
        for (int i = 0; i < n; ++i) {
            x[i] = rng.uniform(0, 8);
            y[i] = rng.uniform(0, 8);
        }
        double ts = time_best_of(reps, [&] {
            for (int it = 0; it < 2000; ++it)
                kernels::layout_forces_serial(g, x, y, 1e-3, 1.0, 1.1, fx, fy);
        });
        double tp = time_best_of(reps, [&] {
            for (int it = 0; it < 2000; ++it) kernels::layout_forces(g, x, y, 1e-3, 1.0, 1.1, fx2, fy2);
        });
        report("layout forces (n=60)", ts, tp);
        if (fx != fx2 || fy != fy2) std::printf("  MISMATCH in layout forces!\n");
    }

    for (int m : {60, 120, 240}) {
        Mat psi(m, m);
        Vec lambda(m), fp(m);
        for (int j = 0; j < m; ++j) {
            lambda[j] = rng.uniform(0, 6);
            fp[j] = rng.gaussian();
            for (int i = 0; i < m; ++i) psi(i, j) = rng.gaussian();
        }
        Mat h1, h2;
        double ts = time_best_of(reps, [&] {
            for (int it = 0; it < 20; ++it) kernels::hessian_serial(lambda, psi, fp, h1);
        });
        double tp = time_best_of(reps, [&] {
            for (int it = 0; it < 20; ++it) kernels::hessian(lambda, psi, fp, h2);
        });
        char name[64];
        std::snprintf(name, sizeof name, "hessian assembly (m=%d)", m);
        report(name, ts, tp);
        if ((h1 - h2).cwiseAbs().maxCoeff() != 0.0) std::printf("  MISMATCH in hessian!\n");
    }

    {
        Graph g = petersen_graph();
        auto auts = automorphisms(g);
        SignedGroup G = build_gamma0(auts, true);
        std::vector<const SignedSymmetry*> elems;
        for (int i = 0; i < G.order(); ++i) elems.push_back(&G.element(i));
        std::vector<Complex> w(elems.size());
        for (auto& c : w) c = Complex(rng.gaussian(), rng.gaussian());
        CMat P1(10, 10), P2(10, 10);
        double ts = time_best_of(reps, [&] {
            for (int it = 0; it < 2000; ++it)
                kernels::accumulate_signed_perms_serial(elems, w, P1);
        });
        double tp = time_best_of(reps, [&] {
            for (int it = 0; it < 2000; ++it) kernels::accumulate_signed_perms(elems, w, P2);
        });
        report("projector accumulation", ts, tp);
        if ((P1 - P2).cwiseAbs().maxCoeff() != 0.0) std::printf("  MISMATCH in projector!\n");
    }
    return 0;
}
