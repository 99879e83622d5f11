#include "mapdist/characteristic.hpp"

#include <array>
#include <cmath>

#include "mapdist/errors.hpp"
#include "mapdist/limits.hpp"

namespace mapdist {

namespace {

double coupling_or_zero(const std::map<std::string, double>& c, const std::string& name) {
    auto it = c.find(name);
    return it == c.end() ? 0.0 : it->second;
}

// U_{2j}(w) rewritten as a polynomial in y = w^2 - 2 = x + 1/x
DPoly cheb_even_in_y(int two_j) {
    RPoly u = chebyshev_u_poly(two_j);
    DPoly acc;
    DPoly yp2({std::vector<double>{2.0, 1.0}});  // y + 2 = w^2
    DPoly pw = DPoly::constant(1.0);
    for (int k = 0; 2 * k <= u.degree(); ++k) {
        acc = acc + pw.scaled(u.coeff(2 * k).to_double());
        pw = pw * yp2;
    }
    return acc;
}

DPoly even_valence_char(const ModelSpec& m, const std::map<std::string, double>& couplings,
                        double R) {
    DPoly chi = DPoly::constant(1.0);
    for (const auto& [valence, name] : m.weights) {
        int k = valence / 2 - 1;  // valence = 2k + 2
        double gk = couplings.at(name) * std::pow(R, k);
        DPoly sum;
        for (int l = 0; l <= k; ++l) {
            double binom = Rational::binomial(2 * k + 1, l).to_double();
            sum = sum + cheb_even_in_y(2 * k - 2 * l).scaled(binom);
        }
        chi = chi - sum.scaled(gk);
    }
    return chi;
}

DPoly arbitrary_valence_char(const ModelSpec& m, const std::map<std::string, double>& couplings,
                             double R, double S) {
    double g3 = 0, g4 = 0;
    for (const auto& [valence, name] : m.weights) {
        if (valence == 3)
            g3 = couplings.at(name);
        else if (valence == 4)
            g4 = couplings.at(name);
        else
            throw usage_error("characteristic_equation: only valences 3 and 4 supported here");
    }
    if (g4 == 0.0) {
        // pure trivalent: 1 - g^2 R^3 (y + 2)
        return DPoly({std::vector<double>{1.0 - 2.0 * g3 * g3 * R * R * R,
                                          -g3 * g3 * R * R * R}});
    }
    // (g4 R (y + 4) + S(2 g3 + 3 g4 S) - 1)^2 - R (g3 + 3 g4 S)^2 (y + 2)
    DPoly lin({std::vector<double>{g4 * R * 4.0 + S * (2 * g3 + 3 * g4 * S) - 1.0, g4 * R}});
    double amp = R * std::pow(g3 + 3 * g4 * S, 2);
    DPoly y2({std::vector<double>{2.0, 1.0}});
    return lin * lin - y2.scaled(amp);
}

DPoly constellation_char(const ModelSpec& m, const std::map<std::string, double>& couplings,
                         double R) {
    int p = m.p;
    double g = couplings.at(m.g_name);
    // Laurent coefficients of the inner double sum, exponent -> value
    std::map<int, double> laurent;
    for (const auto& [i, name] : m.weights) {
        double w = std::pow(g, i) * couplings.at(name) * std::pow(R, (p - 1) * i - 1);
        for (int mm = 0; mm <= (p - 1) * i - 1; ++mm)
            for (int j = 0; j <= i - 1; ++j) {
                double b = (Rational::binomial(j + mm, mm) *
                            Rational::binomial(p * i - 2 - j - mm, i - j - 1))
                               .to_double();
                if (b != 0.0) laurent[mm - j * (p - 1)] += w * b;
            }
    }
    // multiply by 1 + 1/x + ... + 1/x^(p-2)
    std::map<int, double> full;
    for (const auto& [e, v] : laurent)
        for (int mm = 0; mm <= p - 2; ++mm) full[e - mm] += v;
    // must be symmetric under x -> 1/x
    int top = 0;
    for (const auto& [e, v] : full) top = std::max(top, std::abs(e));
    std::vector<double> sym(top + 1, 0.0);
    for (int e = 0; e <= top; ++e) {
        double a = full.count(e) ? full[e] : 0.0;
        double b = full.count(-e) ? full[-e] : 0.0;
        if (std::fabs(a - b) > 1e-9 * (std::fabs(a) + std::fabs(b) + 1))
            throw structural_error("constellation characteristic: asymmetric Laurent part");
        sym[e] = (a + b) / 2.0;
    }
    DPoly chi = DPoly::constant(1.0) - symmetric_laurent_to_w(sym);
    return chi;
}

}  // namespace

std::array<double, 3> ising_w_roots(double c, double g, double V) {
    double a = (1.0 - g * V) / (g * V);
    double b = c / (g * V * (1.0 - 3.0 * g * V));
    return {a - b, a + b, -(1.0 + g * V) / (g * V)};
}

Complex x_from_w(const Complex& w) {
    Complex disc = std::sqrt(w * w - Complex(4.0));
    Complex x1 = (w + disc) / 2.0;
    Complex x2 = (w - disc) / 2.0;
    Complex x = std::abs(x1) < std::abs(x2) ? x1 : x2;
    if (std::abs(std::abs(x) - 1.0) < 1e-8)
        throw domain_error("x_from_w: root on the unit circle (critical point)");
    return x;
}

CharacteristicEquation characteristic_equation(const ModelSpec& model,
                                               const std::map<std::string, double>& couplings,
                                               const std::map<std::string, double>& limits) {
    if (limits_residual(model, couplings, limits) > 1e-8)
        throw usage_error("characteristic_equation: limits do not solve the model");

    CharacteristicEquation ce;
    switch (model.family) {
        case Family::EvenValence:
            ce.in_w = even_valence_char(model, couplings, limits.at("R"));
            break;
        case Family::ArbitraryValence:
            ce.in_w = arbitrary_valence_char(model, couplings, limits.at("R"), limits.at("S"));
            break;
        case Family::BipartitePValent:
        case Family::Constellation:
            ce.in_w = constellation_char(model, couplings, limits.at("R"));
            break;
        case Family::IsingSymmetric: {
            auto roots = ising_w_roots(coupling_or_zero(couplings, "c"),
                                       coupling_or_zero(couplings, "g"), limits.at("V"));
            DPoly acc = DPoly::constant(1.0);
            for (double w : roots)
                acc = acc * DPoly({std::vector<double>{-w, 1.0}});
            ce.in_w = acc;
            break;
        }
        default:
            throw usage_error("characteristic_equation: unsupported family");
    }

    ce.in_x = w_poly_to_x(to_cpoly(ce.in_w));
    for (const auto& w : poly_roots(to_cpoly(ce.in_w))) ce.disk_roots.push_back(x_from_w(w));
    std::sort(ce.disk_roots.begin(), ce.disk_roots.end(), [](const Complex& a, const Complex& b) {
        double ma = std::abs(a), mb = std::abs(b);
        if (std::fabs(ma - mb) > 1e-14) return ma > mb;
        return std::arg(a) < std::arg(b);
    });
    return ce;
}

}  // namespace mapdist
