#include "mapdist/one_x.hpp"

#include <cmath>
#include <functional>
#include <vector>

#include "mapdist/characteristic.hpp"
#include "mapdist/errors.hpp"
#include "mapdist/limits.hpp"

namespace mapdist {

namespace {

Complex cpow(const Complex& x, long n) {
    if (n >= 0) return std::pow(x, static_cast<double>(n));
    return Complex(1.0) / std::pow(x, static_cast<double>(-n));
}

double system_residual(const std::vector<SequenceEquation>& eqs, int n_lo, int n_hi,
                       const std::function<double(const std::string&)>& coupling,
                       const std::function<double(const std::string&, int)>& seq) {
    double worst = 0.0;
    for (const auto& eq : eqs)
        for (int n = n_lo; n <= n_hi; ++n)
            worst = std::max(worst,
                             std::fabs(eval_at(eq.rhs, n, coupling, seq) - eq.lhs.to_double()));
    return worst;
}

struct TritetForms {
    double R, S, sign;
    Complex x;
    double g3, g4;

    double r_n(long n, double lambda) const {
        auto u = [&](long k) { return 1.0 - lambda * cpow(x, k + 1).real(); };
        return R * u(n) * u(n + 2) / (u(n + 1) * u(n + 1));
    }
    double s_n(long n, double lambda) const {
        auto u = [&](long k) { return 1.0 - lambda * cpow(x, k + 1).real(); };
        double amp = sign * std::sqrt(R * x.real()) * std::pow(1.0 - x.real(), 2);
        return S - amp * lambda * cpow(x, n).real() / (u(n) * u(n + 1));
    }
};

TritetForms make_tritet(double g3, double g4, int root_index) {
    auto model = ModelSpec::arbitrary_valence({{3, "g3"}, {4, "g4"}});
    std::map<std::string, double> coup{{"g3", g3}, {"g4", g4}};
    auto lims = solve_limits(model, coup);
    auto ce = characteristic_equation(model, coup, lims);
    if (root_index < 0 || root_index >= static_cast<int>(ce.disk_roots.size()))
        throw usage_error("one_x_residual_tritet: root index out of range");
    Complex x = ce.disk_roots[root_index];
    if (std::fabs(x.imag()) > 1e-10)
        throw numerical_error("one_x_residual_tritet: complex root, real form inapplicable");
    double R = lims.at("R"), S = lims.at("S");
    double y = x.real() + 1.0 / x.real();
    // the linear characteristic relation fixes the sign of the sqrt branch
    double a = 1.0 - g4 * R * (y + 4.0) - S * (2.0 * g3 + 3.0 * g4 * S);
    double b = std::sqrt(R) * (g3 + 3.0 * g4 * S) *
               (std::sqrt(x.real()) + 1.0 / std::sqrt(x.real()));
    double s = a / b;
    if (std::fabs(std::fabs(s) - 1.0) > 1e-7)
        throw numerical_error("one_x_residual_tritet: root fails the linearized relation");
    return {R, S, s > 0 ? 1.0 : -1.0, x, g3, g4};
}

}  // namespace

int tritet_root_count(double g3, double g4) {
    auto model = ModelSpec::arbitrary_valence({{3, "g3"}, {4, "g4"}});
    std::map<std::string, double> coup{{"g3", g3}, {"g4", g4}};
    auto lims = solve_limits(model, coup);
    return static_cast<int>(characteristic_equation(model, coup, lims).disk_roots.size());
}

double one_x_residual_tritet(double g3, double g4, int root_index, double lambda, int n_lo,
                             int n_hi) {
    auto forms = make_tritet(g3, g4, root_index);
    auto eqs = build_recursion_system(ModelSpec::arbitrary_valence({{3, "g3"}, {4, "g4"}}));
    auto coupling = [&](const std::string& name) { return name == "g3" ? g3 : g4; };
    auto seq = [&](const std::string& name, int n) {
        return name == "R" ? forms.r_n(n, lambda) : forms.s_n(n, lambda);
    };
    return system_residual(eqs, n_lo, n_hi, coupling, seq);
}

std::pair<double, double> tritet_boundary_defect(double g3, double g4, int root_index,
                                                 double lambda) {
    auto f = make_tritet(g3, g4, root_index);
    double x = f.x.real();
    auto u = [&](long k) { return 1.0 - lambda * cpow(f.x, k + 1).real(); };
    double r_m1 = f.R * u(-1) * u(1) / (u(0) * u(0));
    // R_n S_n at n = -1 with the 1 - lambda x^0 factors cancelled analytically
    double amp = f.sign * std::sqrt(f.R * x) * std::pow(1.0 - x, 2);
    double prod = f.S * r_m1 - f.R * amp * lambda * u(1) / (x * std::pow(u(0), 3));
    return {r_m1, prod};
}

double one_x_residual_ising(double c, double g, int branch, double lambda, int n_lo, int n_hi) {
    if (branch < 1 || branch > 3) throw usage_error("one_x_residual_ising: branch must be 1..3");
    auto model = ModelSpec::ising_symmetric();
    std::map<std::string, double> coup{{"c", c}, {"g", g}};
    auto lims = solve_limits(model, coup);
    double V = lims.at("V"), R = lims.at("R");
    double w = ising_w_roots(c, g, V)[branch - 1];
    Complex xc = x_from_w(Complex(w));
    if (std::fabs(xc.imag()) > 1e-10)
        throw numerical_error("one_x_residual_ising: complex branch root");
    double x = xc.real();

    std::function<double(long)> u_n;
    if (branch == 3) {
        double w2 = w * w - 2.0;  // x^2 + 1/x^2
        double z = ((c - 2.0) * w + c - 8.0) * ((c + 2.0) * w + c + 8.0) /
                   ((w2 - (c - 4.0) * w - (c - 2.0)) * (w2 + (c + 4.0) * w + (c + 2.0)));
        u_n = [x, z, lambda](long n) {
            double xn = std::pow(x, static_cast<double>(n));
            return 1.0 - 2.0 * lambda * xn - z * lambda * lambda * xn * xn;
        };
    } else {
        u_n = [x, lambda](long n) { return 1.0 - lambda * std::pow(x, static_cast<double>(n)); };
    }
    auto v_n = [&](long n) { return V * u_n(n) * u_n(n + 3) / (u_n(n + 1) * u_n(n + 2)); };

    std::function<double(long)> r_n;
    std::vector<double> rwin;
    int lo_ext = n_lo - 25;
    if (branch == 3) {
        // bounded solution of R_n = V_n (c + g (R_{n+1} + R_n + R_{n-1})):
        // tridiagonal solve with the limit value clamped at both ends
        int hi_ext = n_hi + 25;
        int len = hi_ext - lo_ext + 1;
        std::vector<double> a(len), b(len), cc(len), d(len);
        for (int i = 0; i < len; ++i) {
            long n = lo_ext + i;
            double vn = v_n(n);
            a[i] = -g * vn;        // R_{n-1}
            b[i] = 1.0 - g * vn;   // R_n
            cc[i] = -g * vn;       // R_{n+1}
            d[i] = c * vn;
        }
        d[0] -= a[0] * R;
        d[len - 1] -= cc[len - 1] * R;
        // Thomas algorithm
        for (int i = 1; i < len; ++i) {
            double m = a[i] / b[i - 1];
            b[i] -= m * cc[i - 1];
            d[i] -= m * d[i - 1];
        }
        rwin.assign(len, 0.0);
        rwin[len - 1] = d[len - 1] / b[len - 1];
        for (int i = len - 2; i >= 0; --i) rwin[i] = (d[i] - cc[i] * rwin[i + 1]) / b[i];
        r_n = [&rwin, lo_ext, R](long n) {
            long i = n - lo_ext;
            if (i < 0 || i >= static_cast<long>(rwin.size())) return R;
            return rwin[i];
        };
    } else {
        double sgn = branch == 1 ? -1.0 : 1.0;
        r_n = [x, lambda, V, R, sgn, u_n](long n) {
            double dev = V * lambda * (1.0 - x) * (1.0 - x * x) *
                         std::pow(x, static_cast<double>(n)) / (u_n(n + 1) * u_n(n + 2));
            return R + sgn * dev;
        };
    }

    auto eqs = ising_reduced_system();
    auto coupling = [&](const std::string& name) { return name == "c" ? c : g; };
    auto seq = [&](const std::string& name, int n) { return name == "V" ? v_n(n) : r_n(n); };
    if (branch == 3) {
        // the second equation holds by construction; the residual lives in
        // the first
        return system_residual({eqs[0]}, n_lo, n_hi, coupling, seq);
    }
    return system_residual(eqs, n_lo, n_hi, coupling, seq);
}

}  // namespace mapdist
