#include "mapdist/scaling.hpp"

#include <cmath>

#include "mapdist/errors.hpp"
#include "mapdist/multicritical.hpp"

namespace mapdist {

namespace {

constexpr double kSqrt6 = 2.449489742783178;
constexpr double kSqrt3 = 1.7320508075688772;
constexpr double kSqrt2 = 1.4142135623730951;

// -(log h)'' as a real jet of the requested order from a complex jet of h
// carrying two extra orders
template <class C>
DJet neg_log_second_derivative(const Jet<C>& h, int order) {
    Jet<C> l = log(h);
    Jet<C> dd = l.differentiated().differentiated();
    std::vector<double> out(order + 1);
    for (int k = 0; k <= order; ++k) {
        C c = dd.taylor(k);
        if (std::abs(c.imag()) > 1e-9 * (1.0 + std::abs(c.real())))
            throw numerical_error("scaling function: non-real jet coefficient");
        out[k] = -static_cast<double>(c.real());
    }
    return DJet(std::move(out));
}

// the three-term sinh combinations cancel to fifth order at r = 0, so the
// spin-model jets run in extended precision
using LC = std::complex<long double>;
using LJet = Jet<LC>;

// determinant of an m x m matrix of jets by cofactor expansion (m <= 3)
CJet jet_det(const std::vector<std::vector<CJet>>& a) {
    size_t m = a.size();
    if (m == 1) return a[0][0];
    if (m == 2) return a[0][0] * a[1][1] - a[0][1] * a[1][0];
    if (m == 3)
        return a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) -
               a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0]) +
               a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
    throw usage_error("jet_det: matrix order above 3");
}

}  // namespace

ScalingFunction ScalingFunction::pure_gravity() {
    ScalingFunction f;
    f.kind_ = Kind::PureGravity;
    return f;
}

ScalingFunction ScalingFunction::wronskian(int m) {
    ScalingFunction f;
    f.kind_ = Kind::Wronskian;
    f.rates_ = multicritical_data(m).a;
    return f;
}

ScalingFunction ScalingFunction::ising_sinh() {
    ScalingFunction f;
    f.kind_ = Kind::IsingSinh;
    return f;
}

ScalingFunction ScalingFunction::ising_series(double lambda, double mu) {
    ScalingFunction f;
    f.kind_ = Kind::IsingSeries;
    f.lambda_ = lambda;
    f.mu_ = mu;
    return f;
}

ScalingFunction ScalingFunction::ising_series_matched() {
    ScalingFunction f;
    f.kind_ = Kind::IsingSeries;
    f.lambda_ = 12.0L * (4.0L + 3.0L * sqrtl(2.0L));
    f.mu_ = -12.0L * (17.0L + 12.0L * sqrtl(2.0L));
    return f;
}

DJet ScalingFunction::jet(double r, int order) const {
    if (r <= 0) throw domain_error("ScalingFunction::jet: r must be positive");
    if (order > 6) throw usage_error("ScalingFunction::jet: order above 6");
    switch (kind_) {
        case Kind::PureGravity: {
            auto x = DJet::variable(r, order);
            auto s = sinh(std::sqrt(1.5) * x);
            return DJet::constant(3.0, order) / (s * s);
        }
        case Kind::Wronskian: {
            int m = static_cast<int>(rates_.size());
            int base_order = order + 2 + (m - 1);
            std::vector<std::vector<CJet>> mat(m, std::vector<CJet>(m));
            auto z = CJet::variable(Complex(r, 0.0), base_order);
            for (int i = 0; i < m; ++i) {
                CJet f = sinh((rates_[i] / 2.0) * z);
                for (int j = 0; j < m; ++j) {
                    mat[i][j] = f.truncated(base_order - (m - 1));
                    f = f.differentiated();
                }
            }
            CJet w = jet_det(mat);
            DJet res = neg_log_second_derivative(w, order);
            // F = -2 (log W)''
            std::vector<double> out(order + 1);
            for (int k = 0; k <= order; ++k) out[k] = 2.0 * res.taylor(k);
            return DJet(std::move(out));
        }
        case Kind::IsingSinh: {
            const long double s6 = sqrtl(6.0L), s3 = sqrtl(3.0L), s2 = sqrtl(2.0L);
            auto z = LJet::variable(LC(r, 0.0L), order + 2);
            LJet b = sinh(LC(s6 + s3) * z) + LC(17.0L + 12.0L * s2) * sinh(LC(s6 - s3) * z) -
                     LC(2.0L * (4.0L + 3.0L * s2)) * sinh(LC(s3) * z);
            return neg_log_second_derivative(b, order);
        }
        case Kind::IsingSeries: {
            const long double s6 = sqrtl(6.0L), s3 = sqrtl(3.0L), s2 = sqrtl(2.0L);
            const long double lam = lambda_, mu = mu_;
            auto z = LJet::variable(LC(r, 0.0L), order + 2);
            auto ex = [&](long double k) { return exp(LC(-k) * z); };
            LJet a = LJet::constant(LC(1.0L), order + 2) - LC(lam / 6.0L) * ex(s6) -
                     LC(mu / 12.0L) * ex(2.0L * s3) -
                     LC(lam * lam / 288.0L) * ex(2.0L * s6) -
                     LC((17.0L - 12.0L * s2) / 72.0L * lam * mu) * ex(s6 + 2.0L * s3) +
                     LC((577.0L - 408.0L * s2) / 3456.0L * lam * lam * mu) *
                         ex(2.0L * (s6 + s3));
            return neg_log_second_derivative(a, order);
        }
    }
    throw usage_error("ScalingFunction::jet: unknown kind");
}

Complex ScalingFunction::pure_gravity_value(const Complex& z) {
    Complex w = std::sqrt(1.5) * z;
    if (std::abs(w) < 1e-3) {
        // Laurent expansion around the pole keeps small arguments accurate
        Complex w2 = w * w;
        return 3.0 * (1.0 / w2 - 1.0 / 3.0 + w2 / 15.0 - w2 * w2 * 2.0 / 189.0);
    }
    Complex s = std::sinh(w);
    return 3.0 / (s * s);
}

double ode_residual_max(const ScalingFunction& f, const DiffPoly& ode,
                        const std::vector<double>& grid) {
    int order = ode.max_order();
    double worst = 0.0;
    for (double r : grid) {
        DJet j = f.jet(r, order);
        std::vector<double> derivs(order + 1);
        for (int k = 0; k <= order; ++k) derivs[k] = j.derivative(k);
        worst = std::max(worst, std::fabs(ode.eval(derivs)));
    }
    return worst;
}

std::vector<double> uniform_grid(double lo, double hi, int points) {
    std::vector<double> g(points);
    for (int i = 0; i < points; ++i)
        g[i] = lo + (hi - lo) * i / std::max(1, points - 1);
    return g;
}

}  // namespace mapdist
