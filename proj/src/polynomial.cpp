#include "mapdist/polynomial.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <numbers>

#include "mapdist/errors.hpp"

namespace mapdist {

CPoly to_cpoly(const DPoly& p) {
    std::vector<Complex> c(p.coeffs().begin(), p.coeffs().end());
    return CPoly(std::move(c));
}

CPoly to_cpoly(const RPoly& p) {
    std::vector<Complex> c;
    c.reserve(p.coeffs().size());
    for (const auto& v : p.coeffs()) c.emplace_back(v.to_double(), 0.0);
    return CPoly(std::move(c));
}

DPoly to_dpoly(const RPoly& p) {
    std::vector<double> c;
    c.reserve(p.coeffs().size());
    for (const auto& v : p.coeffs()) c.push_back(v.to_double());
    return DPoly(std::move(c));
}

namespace {

double coeff_scale(const CPoly& p) {
    double m = 0.0;
    for (const auto& c : p.coeffs()) m = std::max(m, std::abs(c));
    return m;
}

std::vector<Complex> companion_eigenvalues(const CPoly& p) {
    int n = p.degree();
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n, n);
    Complex lead = p.coeff(n);
    for (int i = 1; i < n; ++i) m(i, i - 1) = 1.0;
    for (int i = 0; i < n; ++i) m(i, n - 1) = -p.coeff(i) / lead;
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(m, false);
    std::vector<Complex> out(n);
    for (int i = 0; i < n; ++i) out[i] = es.eigenvalues()(i);
    return out;
}

bool aberth(const CPoly& p, const CPoly& dp, std::vector<Complex>& z, double tol) {
    const int n = static_cast<int>(z.size());
    for (int iter = 0; iter < 200; ++iter) {
        double worst = 0.0;
        for (int i = 0; i < n; ++i) {
            Complex pv = p.eval(z[i]);
            Complex dv = dp.eval(z[i]);
            Complex newton = dv == Complex(0) ? Complex(0) : pv / dv;
            Complex rep(0);
            for (int j = 0; j < n; ++j)
                if (j != i) rep += Complex(1) / (z[i] - z[j]);
            Complex denom = Complex(1) - newton * rep;
            Complex step = denom == Complex(0) ? newton : newton / denom;
            z[i] -= step;
            worst = std::max(worst, std::abs(step) / std::max(1.0, std::abs(z[i])));
        }
        if (worst < tol * 1e-2) return true;
    }
    return false;
}

}  // namespace

std::vector<Complex> poly_roots(const CPoly& p, double tol) {
    if (p.degree() < 1) throw usage_error("poly_roots: degree must be >= 1");
    int n = p.degree();
    double scale = coeff_scale(p);

    // initial guesses on a circle of radius from the coefficient bound
    double radius = 0.0;
    for (int k = 0; k < n; ++k)
        radius = std::max(radius, 2.0 * std::pow(std::abs(p.coeff(k) / p.coeff(n)), 1.0 / (n - k)));
    if (radius == 0.0) radius = 1.0;
    std::vector<Complex> z(n);
    for (int i = 0; i < n; ++i) {
        double th = 2.0 * std::numbers::pi * i / n + 0.4;
        z[i] = radius * Complex(std::cos(th), std::sin(th));
    }

    CPoly dp = p.derivative();
    bool ok = aberth(p, dp, z, tol);
    if (!ok) z = companion_eigenvalues(p);

    // polish by a few Newton steps and validate residuals
    for (auto& r : z)
        for (int it = 0; it < 3; ++it) {
            Complex dv = dp.eval(r);
            if (dv == Complex(0)) break;
            r -= p.eval(r) / dv;
        }
    for (const auto& r : z) {
        double res = std::abs(p.eval(r));
        double bound = tol * std::max(scale, 1.0) * std::pow(std::max(1.0, std::abs(r)), n) * 1e3;
        if (!(res < bound))
            throw numerical_error("poly_roots: residual " + std::to_string(res) +
                                  " above tolerance after iteration budget");
    }

    // cluster nearly coincident roots (multiple roots) to their mean
    std::vector<bool> used(z.size(), false);
    std::vector<Complex> out;
    double cluster_eps = 1e-7 * std::max(1.0, radius);
    for (size_t i = 0; i < z.size(); ++i) {
        if (used[i]) continue;
        std::vector<size_t> grp{i};
        for (size_t j = i + 1; j < z.size(); ++j)
            if (!used[j] && std::abs(z[i] - z[j]) < cluster_eps) {
                grp.push_back(j);
                used[j] = true;
            }
        Complex mean(0);
        for (size_t k : grp) mean += z[k];
        mean /= static_cast<double>(grp.size());
        for (size_t k = 0; k < grp.size(); ++k) out.push_back(mean);
    }
    return out;
}

std::vector<Complex> roots_in_unit_disk(const CPoly& p, double tol, double circle_tol) {
    std::vector<Complex> roots;
    if (is_palindromic(p) && p.degree() % 2 == 0 && p.degree() >= 2) {
        // halve the degree: solve in w = x + 1/x, then split each w-root
        int m = p.degree() / 2;
        std::vector<Complex> s(m + 1);
        for (int k = 0; k <= m; ++k) s[k] = p.coeff(m + k);
        CPoly q = symmetric_laurent_to_w(s);
        for (const auto& w : poly_roots(q, tol)) {
            // x^2 - w x + 1 = 0
            Complex disc = std::sqrt(w * w - Complex(4));
            roots.push_back((w + disc) / 2.0);
            roots.push_back((w - disc) / 2.0);
        }
    } else {
        roots = poly_roots(p, tol);
    }
    std::vector<Complex> in;
    for (const auto& r : roots) {
        double m = std::abs(r);
        if (std::abs(m - 1.0) < circle_tol)
            throw domain_error("roots_in_unit_disk: root on the unit circle (critical point)");
        if (m < 1.0) in.push_back(r);
    }
    std::sort(in.begin(), in.end(), [](const Complex& a, const Complex& b) {
        double ma = std::abs(a), mb = std::abs(b);
        if (std::abs(ma - mb) > 1e-14) return ma > mb;
        return std::arg(a) < std::arg(b);
    });
    return in;
}

bool is_palindromic(const CPoly& p, double tol) {
    int n = p.degree();
    if (n < 0) return false;
    double scale = coeff_scale(p);
    for (int k = 0; k <= n; ++k)
        if (std::abs(p.coeff(k) - p.coeff(n - k)) > tol * std::max(1.0, scale)) return false;
    return true;
}

CPoly w_poly_to_x(const CPoly& q) {
    // x^deg * q(x + 1/x): build with Laurent bookkeeping, offset by deg
    int m = q.degree();
    std::vector<Complex> acc(2 * m + 1, Complex(0));  // exponent k-m at index k
    // powers of (x + 1/x)
    std::vector<std::vector<Complex>> pw(m + 1);
    pw[0] = {Complex(1)};  // exponent range [0,0]
    for (int k = 1; k <= m; ++k) {
        // multiply pw[k-1] (range [-(k-1), k-1]) by (x + 1/x)
        std::vector<Complex> nxt(2 * k + 1, Complex(0));
        for (int i = 0; i < 2 * k - 1; ++i) {
            nxt[i] += pw[k - 1][i];      // * x^{-1}: exponent shifts down
            nxt[i + 2] += pw[k - 1][i];  // * x^{+1}
        }
        pw[k] = std::move(nxt);
    }
    for (int k = 0; k <= m; ++k) {
        Complex c = q.coeff(k);
        if (c == Complex(0)) continue;
        // pw[k] spans exponents [-k, k] at indices [0, 2k]
        for (int i = 0; i <= 2 * k; ++i) acc[(i - k) + m] += c * pw[k][i];
    }
    return CPoly(std::move(acc));
}

RPoly chebyshev_u_poly(int n) {
    if (n < -1) throw usage_error("chebyshev_u_poly: n must be >= -1");
    if (n == -1) return RPoly::zero();
    RPoly prev = RPoly::zero();
    RPoly cur = RPoly::constant(Rational(1));
    for (int k = 0; k < n; ++k) {
        RPoly next = RPoly::x() * cur - prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

}  // namespace mapdist
