#include "pde/layout.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "pde/kernels.hpp"
#include "pde/rng.hpp"

namespace pde {

namespace {

constexpr double kCharge = 1.0;  // Q^2; kept explicit in the force units
constexpr double kEps = 0.001;
constexpr double kNu = 1.0;
constexpr double kExp = 1.1;
constexpr double kStep = 0.1;
constexpr double kForceTol = 1e-6;
constexpr int kMaxIters = 60000;

Layout run_single(const Graph& g, uint64_t seed) {
    const int n = g.vertex_count();
    Layout l;
    l.x.resize(n);
    l.y.resize(n);
    Rng rng(seed);
    double side = std::sqrt(static_cast<double>(n));
    for (int i = 0; i < n; ++i) {
        l.x[i] = rng.uniform(0.0, side);
        l.y[i] = rng.uniform(0.0, side);
    }
    if (n == 1) {
        l.x[0] = l.y[0] = 0.0;
        l.converged = true;
        return l;
    }
    std::vector<double> fx, fy;
    for (int it = 0; it < kMaxIters; ++it) {
        kernels::layout_forces(g, l.x, l.y, kEps, kNu, kExp, fx, fy);
        double worst = 0.0;
        for (int i = 0; i < n; ++i)
            worst = std::max(worst, std::max(std::abs(fx[i]), std::abs(fy[i])));
        if (worst * kCharge < kForceTol) {
            l.converged = true;
            break;
        }
        for (int i = 0; i < n; ++i) {
            l.x[i] += kStep * fx[i];
            l.y[i] += kStep * fy[i];
        }
    }
    return l;
}

void rotate_and_center(Layout& l, const Graph& g) {
    const int n = l.size();
    if (n >= 2 && g.edge_count() > 0) {
        // 360 one-degree buckets; a slope fills both its bucket and the
        // opposite one, so the histogram is orientation-free.
        std::vector<int> hist(360, 0);
        for (auto [i, j] : g.edges()) {
            double ang = std::atan2(l.y[j] - l.y[i], l.x[j] - l.x[i]) * 180.0 / M_PI;
            int b = static_cast<int>(std::floor(ang)) % 360;
            if (b < 0) b += 360;
            hist[b]++;
            hist[(b + 180) % 360]++;
        }
        int best = 0;
        for (int b = 1; b < 360; ++b)
            if (hist[b] > hist[best]) best = b;
        double theta = -(best + 0.5) * M_PI / 180.0;
        double c = std::cos(theta), s = std::sin(theta);
        for (int i = 0; i < n; ++i) {
            double x = l.x[i], y = l.y[i];
            l.x[i] = c * x - s * y;
            l.y[i] = s * x + c * y;
        }
    }
    double cx = 0.0, cy = 0.0;
    for (int i = 0; i < n; ++i) {
        cx += l.x[i];
        cy += l.y[i];
    }
    for (int i = 0; i < n; ++i) {
        l.x[i] -= cx / n;
        l.y[i] -= cy / n;
    }
}

}  // namespace

int layout_complexity(const Layout& l) {
    std::set<long long> dist;
    for (int i = 0; i < l.size(); ++i)
        for (int j = i + 1; j < l.size(); ++j) {
            double dx = l.x[i] - l.x[j], dy = l.y[i] - l.y[j];
            dist.insert(llround(std::sqrt(dx * dx + dy * dy) * 1e6));
        }
    return static_cast<int>(dist.size());
}

LayoutResult spring_layout(const Graph& g, int restarts, uint64_t seed) {
    restarts = std::max(1, restarts);
    std::vector<Layout> runs(restarts);
#pragma omp parallel for schedule(dynamic)
    for (int r = 0; r < restarts; ++r) {
        runs[r] = run_single(g, seed * 0x100000001b3ull + static_cast<uint64_t>(r));
        runs[r].complexity = layout_complexity(runs[r]);
    }
    // deterministic merge: converged first, then by (complexity, restart index)
    std::vector<int> order(restarts);
    for (int r = 0; r < restarts; ++r) order[r] = r;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (runs[a].converged != runs[b].converged) return runs[a].converged;
        if (runs[a].complexity != runs[b].complexity) return runs[a].complexity < runs[b].complexity;
        return a < b;
    });
    LayoutResult out;
    out.best = runs[order[0]];
    for (int k = 1; k < restarts; ++k) out.alternates.push_back(runs[order[k]]);
    rotate_and_center(out.best, g);
    for (auto& alt : out.alternates) rotate_and_center(alt, g);
    return out;
}

}  // namespace pde
