#include "mapdist/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

#include "mapdist/errors.hpp"
#include "mapdist/scaling.hpp"

namespace mapdist {

double coefficient_asymptotics(long N) {
    if (N < 1) throw usage_error("coefficient_asymptotics: N >= 1");
    // 3^N c_N = 3^N binom(2N, N) / (N+1); work in logs
    double logv = N * std::log(3.0) + std::lgamma(2.0 * N + 1) - 2 * std::lgamma(N + 1.0) -
                  std::log(N + 1.0) - N * std::log(12.0) + 1.5 * std::log(static_cast<double>(N));
    return std::exp(logv);
}

namespace {

// Gauss-Kronrod 7-15 nodes and weights on [-1, 1]
const double kXgk[15] = {-0.991455371120813, -0.949107912342759, -0.864864423359769,
                         -0.741531185599394, -0.586087235467691, -0.405845151377397,
                         -0.207784955007898, 0.0,                0.207784955007898,
                         0.405845151377397,  0.586087235467691,  0.741531185599394,
                         0.864864423359769,  0.949107912342759,  0.991455371120813};
const double kWk[15] = {0.022935322010529, 0.063092092629979, 0.104790010322250,
                        0.140653259715525, 0.169004726639267, 0.190350578064785,
                        0.204432940075298, 0.209482141084728, 0.204432940075298,
                        0.190350578064785, 0.169004726639267, 0.140653259715525,
                        0.104790010322250, 0.063092092629979, 0.022935322010529};
const double kWg[7] = {0.129484966168870, 0.279705391489277, 0.381830050505119,
                       0.417959183673469, 0.381830050505119, 0.279705391489277,
                       0.129484966168870};

template <class F>
std::pair<double, double> gk15(const F& f, double a, double b) {
    double h = (b - a) / 2, c = (a + b) / 2;
    double k = 0, g = 0;
    for (int i = 0; i < 15; ++i) {
        double v = f(c + h * kXgk[i]);
        k += kWk[i] * v;
        if (i % 2 == 1) g += kWg[i / 2] * v;
    }
    return {k * h, std::fabs((k - g) * h)};
}

template <class F>
double adaptive_quad(const F& f, double a, double b, double tol, int max_panels) {
    struct Panel {
        double a, b, val, err;
    };
    std::vector<Panel> panels;
    auto [v, e] = gk15(f, a, b);
    panels.push_back({a, b, v, e});
    for (int it = 0; it < max_panels; ++it) {
        double total_err = 0;
        size_t worst = 0;
        for (size_t i = 0; i < panels.size(); ++i) {
            total_err += panels[i].err;
            if (panels[i].err > panels[worst].err) worst = i;
        }
        if (total_err < tol) break;
        Panel p = panels[worst];
        double mid = (p.a + p.b) / 2;
        auto [v1, e1] = gk15(f, p.a, mid);
        auto [v2, e2] = gk15(f, mid, p.b);
        panels[worst] = {p.a, mid, v1, e1};
        panels.push_back({mid, p.b, v2, e2});
    }
    double sum = 0;
    for (const auto& p : panels) sum += p.val;
    return sum;
}

}  // namespace

double distance_probability(double r, int max_panels) {
    if (r <= 0) throw domain_error("distance_probability: r must be positive");
    auto integrand = [&](double u) {
        if (u <= 0) return 0.0;
        // principal square root of -i u
        Complex z = std::sqrt(u) * Complex(std::sqrt(0.5), -std::sqrt(0.5));
        double re = ScalingFunction::pure_gravity_value(r * z).real();
        return (4.0 / std::sqrt(M_PI)) * u * u * std::exp(-u * u) * (1.0 + re);
    };
    // the Gaussian factor makes the tail beyond u = 8 smaller than 1e-27
    double val = adaptive_quad(integrand, 0.0, 8.0, 1e-12, max_panels);
    return val;
}

std::vector<double> fractal_ratios(int n, const std::vector<int>& orders) {
    if (orders.empty()) return {};
    int N = *std::max_element(orders.begin(), orders.end());
    if (N < 1 || N > 4000) throw usage_error("fractal_ratios: order out of budget");
    if (n < 0) throw usage_error("fractal_ratios: negative distance");
    // coefficients of R_k in ghat = 12 g keep magnitudes near N^{-3/2}
    const int rows = N + 5;
    const int cols = N + 1;
    std::vector<double> C(static_cast<size_t>(rows) * cols, 0.0);
    auto at = [&](int k, int d) -> double& { return C[static_cast<size_t>(k) * cols + d]; };
    for (int k = 0; k < rows; ++k) at(k, 0) = 1.0;
    std::vector<double> stable(cols, 0.0);
    stable[0] = 1.0;
    // stable entries solve R = 1 + (ghat/12) 3 R^2
    for (int d = 1; d <= N; ++d) {
        double conv = 0.0;
        for (int j = 0; j < d; ++j) conv += stable[j] * stable[d - 1 - j];
        stable[d] = conv * 3.0 / 12.0;
    }
    for (int d = 1; d <= N; ++d) {
        int active = std::min(rows - 1, d + 3);
        for (int k = 0; k <= active; ++k) {
            // [ghat^d] R_k = (1/12) [ghat^{d-1}] R_k (R_{k-1} + R_k + R_{k+1})
            double conv = 0.0;
            for (int j = 0; j < d; ++j) {
                double neigh = at(k, d - 1 - j) + at(k + 1, d - 1 - j);
                if (k > 0) neigh += at(k - 1, d - 1 - j);
                conv += at(k, j) * neigh;
            }
            at(k, d) = conv / 12.0;
        }
        for (int k = active + 1; k < rows; ++k) at(k, d) = stable[d];
    }
    std::vector<double> out;
    out.reserve(orders.size());
    for (int ord : orders) out.push_back(at(n, ord) / at(0, ord));
    return out;
}

double fractal_ratio(int n, int N) { return fractal_ratios(n, {N})[0]; }

}  // namespace mapdist
