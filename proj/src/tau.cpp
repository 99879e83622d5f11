#include "mapdist/tau.hpp"

#include <cmath>

#include "mapdist/errors.hpp"

namespace mapdist {

namespace {

Complex cpow(const Complex& x, long n) {
    if (n >= 0) return std::pow(x, static_cast<double>(n));
    return Complex(1.0) / std::pow(x, static_cast<double>(-n));
}

void check_distinct(const std::vector<Complex>& roots) {
    for (size_t i = 0; i < roots.size(); ++i)
        for (size_t j = i + 1; j < roots.size(); ++j)
            if (std::abs(roots[i] - roots[j]) < 1e-10)
                throw numerical_error("tau solution: coincident characteristic roots");
}

}  // namespace

Complex TauSolution::pair_factor(int i, int j) const {
    if (pairing == Pairing::EvenValence) {
        Complex r = (x[i] - x[j]) / (Complex(1.0) - x[i] * x[j]);
        return r * r;
    }
    return (pv[i] - pv[j]) * (qv[i] - qv[j]) / ((pv[i] - qv[j]) * (qv[i] - pv[j]));
}

TauSolution make_even_valence_tau(const std::vector<Complex>& roots, double R) {
    check_distinct(roots);
    TauSolution sol;
    sol.pairing = TauSolution::Pairing::EvenValence;
    sol.x = roots;
    sol.limit = R;
    sol.exp_offset = static_cast<int>(roots.size());
    sol.ratio = {0, 3, 1, 2};
    const int m = static_cast<int>(roots.size());
    for (int i = 0; i < m; ++i) {
        Complex l(1.0);
        for (int j = 0; j < m; ++j)
            if (j != i) l *= (Complex(1.0) - roots[i] * roots[j]) / (roots[i] - roots[j]);
        sol.lambda.push_back(l);
    }
    return sol;
}

TauSolution make_bipartite_tau(const std::vector<Complex>& roots, double R, int p) {
    check_distinct(roots);
    TauSolution sol;
    sol.pairing = TauSolution::Pairing::Bipartite;
    sol.x = roots;
    sol.limit = R;
    sol.exp_offset = 0;
    // the ratio window sits m - (p - 2) steps up: zero for p-valent graphs
    // (m = p - 2) and growing with the extra constellation roots
    int s = static_cast<int>(roots.size()) - (p - 2);
    sol.ratio = {s, s + p + 1, s + 1, s + p};
    const int m = static_cast<int>(roots.size());
    auto pval = [&](const Complex& x) {
        Complex s(0.0);
        for (int k = 1; k <= p - 1; ++k) s += cpow(x, k);
        return s;
    };
    for (const auto& x : roots) {
        sol.pv.push_back(pval(x));
        sol.qv.push_back(pval(Complex(1.0) / x));
    }
    for (int i = 0; i < m; ++i) {
        Complex l = cpow(roots[i], static_cast<long>(p - 1) * m - 1);
        for (int j = 0; j < m; ++j)
            if (j != i) l *= (sol.qv[i] - sol.pv[j]) / (sol.pv[i] - sol.pv[j]);
        sol.lambda.push_back(l);
    }
    return sol;
}

Complex tau_u(const TauSolution& sol, long n) {
    const int m = static_cast<int>(sol.x.size());
    Complex total(0.0);
    for (unsigned mask = 0; mask < (1u << m); ++mask) {
        Complex term(1.0);
        int bits = 0;
        for (int i = 0; i < m; ++i) {
            if (!(mask & (1u << i))) continue;
            ++bits;
            term *= sol.lambda[i] * cpow(sol.x[i], n + sol.exp_offset);
            for (int j = i + 1; j < m; ++j)
                if (mask & (1u << j)) term *= sol.pair_factor(i, j);
        }
        total += (bits % 2 ? -term : term);
    }
    return total;
}

double closed_R_n(const TauSolution& sol, long n) {
    Complex num = tau_u(sol, n + sol.ratio[0]) * tau_u(sol, n + sol.ratio[1]);
    Complex den = tau_u(sol, n + sol.ratio[2]) * tau_u(sol, n + sol.ratio[3]);
    if (std::abs(den) < 1e-300) throw domain_error("closed_R_n: vanishing denominator");
    Complex r = Complex(sol.limit) * num / den;
    if (std::abs(r.imag()) > 1e-8 * (1.0 + std::abs(r.real())))
        throw numerical_error("closed_R_n: non-real value");
    return r.real();
}

double lambda_fixing_residual(const TauSolution& sol) {
    double worst = 0.0;
    for (int k = 1; k <= static_cast<int>(sol.x.size()); ++k)
        worst = std::max(worst, std::abs(tau_u(sol, -k)));
    return worst;
}

void polish_lambdas(TauSolution& sol, int iters) {
    const int m = static_cast<int>(sol.x.size());
    if (m == 0) return;
    for (int it = 0; it < iters; ++it) {
        if (lambda_fixing_residual(sol) < 1e-13) return;
        // complex Newton on lambda -> (u_{-1}, ..., u_{-m})
        std::vector<Complex> f(m);
        for (int k = 0; k < m; ++k) f[k] = tau_u(sol, -(k + 1));
        std::vector<std::vector<Complex>> jac(m, std::vector<Complex>(m));
        const double h = 1e-7;
        for (int j = 0; j < m; ++j) {
            TauSolution pert = sol;
            pert.lambda[j] += Complex(h, 0.0);
            for (int k = 0; k < m; ++k) jac[k][j] = (tau_u(pert, -(k + 1)) - f[k]) / h;
        }
        // solve jac * delta = f
        std::vector<Complex> rhs = f;
        std::vector<int> perm(m);
        for (int i = 0; i < m; ++i) perm[i] = i;
        for (int c = 0; c < m; ++c) {
            int piv = c;
            for (int r = c + 1; r < m; ++r)
                if (std::abs(jac[r][c]) > std::abs(jac[piv][c])) piv = r;
            std::swap(jac[c], jac[piv]);
            std::swap(rhs[c], rhs[piv]);
            if (std::abs(jac[c][c]) < 1e-300)
                throw numerical_error("polish_lambdas: singular Jacobian");
            for (int r = c + 1; r < m; ++r) {
                Complex mlt = jac[r][c] / jac[c][c];
                for (int cc = c; cc < m; ++cc) jac[r][cc] -= mlt * jac[c][cc];
                rhs[r] -= mlt * rhs[c];
            }
        }
        std::vector<Complex> delta(m);
        for (int r = m - 1; r >= 0; --r) {
            Complex s = rhs[r];
            for (int cc = r + 1; cc < m; ++cc) s -= jac[r][cc] * delta[cc];
            delta[r] = s / jac[r][r];
        }
        for (int j = 0; j < m; ++j) sol.lambda[j] -= delta[j];
    }
}

double TrivalentClosedForm::r_n(long n) const {
    auto u = [&](long k) { return Complex(1.0) - std::pow(x, static_cast<double>(k + 1)); };
    Complex v = Complex(R) * u(n) * u(n + 2) / (u(n + 1) * u(n + 1));
    return v.real();
}

double TrivalentClosedForm::s_n(long n) const {
    auto u = [&](long k) { return Complex(1.0) - std::pow(x, static_cast<double>(k + 1)); };
    Complex t = Complex(g * R * R) * (Complex(1.0) - x) * (Complex(1.0) - x * x) *
                std::pow(x, static_cast<double>(n));
    Complex v = Complex(S) - t / (u(n) * u(n + 1));
    return v.real();
}

double chebyshev_det_R_n(const std::vector<Complex>& roots, double R, long n) {
    if (roots.size() != 2)
        throw usage_error("chebyshev_det_R_n: implemented for two roots");
    auto w = [&](int i) { return std::sqrt(roots[i]) + Complex(1.0) / std::sqrt(roots[i]); };
    Complex w0 = w(0), w1 = w(1);
    auto det = [&](long k) {
        // negative first index can occur for small n; U_{-1} = 0 extends the
        // recurrence downward as U_{-n-2} = -U_n
        auto cheb = [&](long idx, const Complex& ww) -> Complex {
            if (idx >= -1) return chebyshev_u(static_cast<int>(idx), ww);
            return -chebyshev_u(static_cast<int>(-idx - 2), ww);
        };
        return cheb(k, w0) * cheb(k + 2, w1) - cheb(k, w1) * cheb(k + 2, w0);
    };
    Complex num = det(n) * det(n + 3);
    Complex den = det(n + 1) * det(n + 2);
    if (std::abs(den) < 1e-300) throw domain_error("chebyshev_det_R_n: vanishing denominator");
    Complex r = Complex(R) * num / den;
    return r.real();
}

}  // namespace mapdist
