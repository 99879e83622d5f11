#include "mapdist/ising_continuum.hpp"

#include <cmath>

#include "mapdist/errors.hpp"
#include "mapdist/polynomial.hpp"
#include "mapdist/scaling.hpp"

namespace mapdist {

namespace {

using QF = __float128;

QF qabs(QF x) { return x < 0 ? -x : x; }

// coefficients in R of W = R s^2 (1 - s^2) - s^3 - 3 g^2 R^3, s = c + 3gR
void quintic_coeffs(QF c, QF g, QF w[6]) {
    QF K = 3 * g;
    w[0] = -c * c * c;
    w[1] = c * c - c * c * c * c - 3 * c * c * K;
    w[2] = 2 * c * K - 4 * c * c * c * K - 3 * c * K * K;
    w[3] = K * K - 6 * c * c * K * K - K * K * K - K * K / 3;
    w[4] = -4 * c * K * K * K;
    w[5] = -K * K * K * K;
}

// The tricritical point sits at a cusp of the double-root locus, which makes
// the bare system W = W' = W'' = 0 Newton-degenerate; matching the factored
// form w5 (R - rho)^3 (R^2 + aR + b) in quad precision reaches the root to
// well below the required tolerance anyway.
void factored_conditions(const QF x[5], QF out[5]) {
    QF w[6];
    quintic_coeffs(x[0], x[1], w);
    QF rho = x[2], a = x[3], b = x[4];
    QF cub[4] = {-rho * rho * rho, 3 * rho * rho, -3 * rho, 1};
    QF quad[3] = {b, a, 1};
    QF prod[6] = {0, 0, 0, 0, 0, 0};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 3; ++j) prod[i + j] += cub[i] * quad[j];
    for (int k = 0; k < 5; ++k) out[k] = w[k] - w[5] * prod[k];
}

}  // namespace

IsingCriticalData ising_critical_data() {
    QF v[5] = {3.8, 1.2, -0.55, 3.1, 2.3};  // c, g, rho, a, b
    for (int iter = 0; iter < 500; ++iter) {
        QF f0[5];
        factored_conditions(v, f0);
        QF jac[5][6];
        for (int j = 0; j < 5; ++j) {
            QF h = QF(1e-14) * (1 + qabs(v[j]));
            QF vp[5], vm[5];
            for (int i = 0; i < 5; ++i) vp[i] = vm[i] = v[i];
            vp[j] += h;
            vm[j] -= h;
            QF fp[5], fm[5];
            factored_conditions(vp, fp);
            factored_conditions(vm, fm);
            for (int i = 0; i < 5; ++i) jac[i][j] = (fp[i] - fm[i]) / (2 * h);
        }
        for (int i = 0; i < 5; ++i) jac[i][5] = f0[i];
        // gaussian elimination with partial pivoting
        for (int col = 0; col < 5; ++col) {
            int piv = col;
            for (int r = col + 1; r < 5; ++r)
                if (qabs(jac[r][col]) > qabs(jac[piv][col])) piv = r;
            for (int k = 0; k < 6; ++k) std::swap(jac[col][k], jac[piv][k]);
            if (qabs(jac[col][col]) < QF(1e-60))
                throw numerical_error("ising_critical_data: singular Newton step");
            for (int r = col + 1; r < 5; ++r) {
                QF m = jac[r][col] / jac[col][col];
                for (int k = col; k < 6; ++k) jac[r][k] -= m * jac[col][k];
            }
        }
        QF dx[5];
        for (int r = 4; r >= 0; --r) {
            QF s = jac[r][5];
            for (int k = r + 1; k < 5; ++k) s -= jac[r][k] * dx[k];
            dx[r] = s / jac[r][r];
        }
        QF step = 0;
        for (int i = 0; i < 5; ++i) {
            v[i] -= dx[i];
            step = std::max(step, qabs(dx[i]));
        }
        if (step < QF(1e-25)) break;
    }
    // validate the original three conditions at the factored solution
    QF w[6];
    quintic_coeffs(v[0], v[1], w);
    QF R = v[2];
    QF W0 = 0, W1 = 0, W2 = 0;
    for (int k = 5; k >= 0; --k) W0 = W0 * R + w[k];
    for (int k = 5; k >= 1; --k) W1 = W1 * R + k * w[k];
    for (int k = 5; k >= 2; --k) W2 = W2 * R + k * (k - 1) * w[k];
    if (qabs(W0) + qabs(W1) + qabs(W2) > QF(1e-12))
        throw numerical_error("ising_critical_data: Newton did not converge");
    IsingCriticalData out;
    out.c = static_cast<double>(v[0]);
    out.g = static_cast<double>(v[1]);
    out.R = static_cast<double>(v[2]);
    out.V = static_cast<double>(v[2] / (v[0] + 3 * v[1] * v[2]));
    out.rate_slow = std::sqrt(6.0);        // branch x3
    out.rate_fast = 2.0 * std::sqrt(3.0);  // branch x1
    return out;
}

bool ising_quintic_exact_at_critical() {
    Rational c(4), g(10, 9), R(-3, 5);
    Rational s = c + Rational(3) * g * R;
    Rational w = R * s * s * (Rational(1) - s * s) - s * s * s -
                 Rational(3) * g * g * R * R * R;
    if (!w.is_zero()) return false;
    // exact first and second derivatives in R of the quintic
    // W = R s^2 (1 - s^2) - s^3 - 3 g^2 R^3, s = c + 3 g R, ds/dR = 3g
    Rational t(3);
    Rational dsdR = t * g;
    Rational s2 = s * s;
    Rational W1 = s2 * (Rational(1) - s2) +
                  R * (Rational(2) * s * dsdR - Rational(4) * s * s2 * dsdR) -
                  t * s2 * dsdR - Rational(9) * g * g * R * R;
    if (!W1.is_zero()) return false;
    Rational W2 = Rational(2) * (Rational(2) * s * dsdR - Rational(4) * s * s2 * dsdR) +
                  R * (Rational(2) * dsdR * dsdR - Rational(12) * s2 * dsdR * dsdR) -
                  Rational(6) * s * dsdR * dsdR - Rational(18) * g * g * R;
    return W2.is_zero();
}

Rational ising_middle_factor_root_at_critical() {
    Rational g(10, 9), V(-3, 10), c(4);
    Rational gv = g * V;
    return (Rational(1) - gv) / gv + c / (gv * (Rational(1) - Rational(3) * gv));
}

std::pair<double, double> ising_series_constants() {
    double s2 = std::sqrt(2.0);
    return {12.0 * (4.0 + 3.0 * s2), -12.0 * (17.0 + 12.0 * s2)};
}

double ising_scaling_equivalence(const std::vector<double>& grid) {
    auto sinh_form = ScalingFunction::ising_sinh();
    auto series_form = ScalingFunction::ising_series_matched();
    double worst = 0.0;
    for (double r : grid)
        worst = std::max(worst, std::fabs(sinh_form.value(r) - series_form.value(r)));
    return worst;
}

IsingWeights ising_weight_map(double K, double H, double g) {
    if (K == 0.0) throw domain_error("ising_weight_map: K = 0 makes the substitution singular");
    double e = std::exp(K);
    double e2 = std::exp(2 * K);
    IsingWeights w;
    w.g2 = e;
    w.gt2 = e;
    w.g4 = std::pow(1 - e2, 2) * g * std::exp(H);
    w.gt4 = std::pow(1 - e2, 2) * g * std::exp(-H);
    if (1 - e2 <= 0)
        throw domain_error("ising_weight_map: leg factor requires exp(2K) < 1");
    w.leg = 1.0 / std::sqrt(1 - e2);
    double denom = 1 - w.g2 * w.gt2;
    w.w_bb = w.gt2 / denom;
    w.w_ww = w.g2 / denom;
    w.w_bw = 1.0 / denom;
    return w;
}

}  // namespace mapdist
