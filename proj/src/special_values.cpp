#include "mapdist/special_values.hpp"

#include "mapdist/model.hpp"
#include "mapdist/sequence_solver.hpp"

namespace mapdist {

namespace {

IdentityReport report(std::string name, int order, const TruncatedSeries& diff) {
    IdentityReport r;
    r.name = std::move(name);
    r.order = order;
    r.exact_zero = diff.is_zero();
    r.max_abs = diff.max_abs_coeff();
    return r;
}

TruncatedSeries mono(const std::vector<std::string>& vars, int cutoff, ExpVec e, long num = 1,
                     long den = 1) {
    return TruncatedSeries::monomial(vars, cutoff, e, Rational(num, den));
}

}  // namespace

std::vector<IdentityReport> special_value_identities(int quad_order, int quadhexa_order,
                                                     int trivalent_order, int bip3_order,
                                                     int bip4_order, int cons3_order) {
    std::vector<IdentityReport> out;

    {  // quadrivalent: R_0 = R - g R^3
        auto fam = solve_sequences(ModelSpec::tetravalent(), quad_order);
        const auto& r0 = fam.at("R", 0);
        const auto& R = fam.at("R", fam.n_max);
        auto g = mono({"g"}, quad_order, {1});
        out.push_back(report("quadrivalent R0", quad_order, r0 - (R - g * R * R * R)));
    }
    {  // two even couplings: R_0 (1 - 3 g4 R - 10 g6 R^2) = R (1 - 4 g4 R - 15 g6 R^2)
        auto model = ModelSpec::even_valence({{4, "g4"}, {6, "g6"}});
        auto fam = solve_sequences(model, quadhexa_order);
        const auto& r0 = fam.at("R", 0);
        const auto& R = fam.at("R", fam.n_max);
        std::vector<std::string> v = model.coupling_names();
        int c = quadhexa_order;
        auto one = TruncatedSeries::constant(v, c, Rational(1));
        auto g4 = mono(v, c, {1, 0});
        auto g6 = mono(v, c, {0, 1});
        auto lhs = r0 * (one - g4.scaled(Rational(3)) * R - g6.scaled(Rational(10)) * R * R);
        auto rhs = R * (one - g4.scaled(Rational(4)) * R - g6.scaled(Rational(15)) * R * R);
        out.push_back(report("tetra/hexa R0", quadhexa_order, lhs - rhs));
    }
    {  // trivalent: R_0 = R - g^2 R^4 and S_0 = S - g R^2
        auto fam = solve_sequences(ModelSpec::trivalent(), trivalent_order);
        const auto& r0 = fam.at("R", 0);
        const auto& s0 = fam.at("S", 0);
        const auto& R = fam.at("R", fam.n_max);
        const auto& S = fam.at("S", fam.n_max);
        auto g = mono({"g"}, trivalent_order, {1});
        out.push_back(
            report("trivalent R0", trivalent_order, r0 - (R - g * g * R * R * R * R)));
        out.push_back(report("trivalent S0", trivalent_order, s0 - (S - g * R * R)));
    }
    {  // bipartite trivalent, h = g gt1 = t^2:
        // R_0 (1 - 2 h R) = R (1 - 3 h R + h^2 R^2)
        int c = 2 * bip3_order;
        auto binding = CouplingBinding::weighted_t({{"g", Rational(1)}, {"gt1", Rational(1)}});
        auto fam = solve_sequences(ModelSpec::bipartite_p_valent(3), c, -1, binding);
        const auto& r0 = fam.at("R", 0);
        const auto& R = fam.at("R", fam.n_max);
        auto one = TruncatedSeries::constant({"t"}, c, Rational(1));
        auto h = mono({"t"}, c, {2});
        auto lhs = r0 * (one - h.scaled(Rational(2)) * R);
        auto rhs = R * (one - h.scaled(Rational(3)) * R + h * h * R * R);
        out.push_back(report("bipartite trivalent R0", bip3_order, lhs - rhs));
    }
    {  // bipartite 4-valent: R_0 (1 - 3 h R^2) = R (1 - 5 h R^2 + 3 h^2 R^4)
        int c = 2 * bip4_order;
        auto binding = CouplingBinding::weighted_t({{"g", Rational(1)}, {"gt1", Rational(1)}});
        auto fam = solve_sequences(ModelSpec::bipartite_p_valent(4), c, -1, binding);
        const auto& r0 = fam.at("R", 0);
        const auto& R = fam.at("R", fam.n_max);
        auto one = TruncatedSeries::constant({"t"}, c, Rational(1));
        auto h = mono({"t"}, c, {2});
        auto R2 = R * R;
        auto lhs = r0 * (one - h.scaled(Rational(3)) * R2);
        auto rhs = R * (one - h.scaled(Rational(5)) * R2 + (h * h * R2 * R2).scaled(Rational(3)));
        out.push_back(report("bipartite 4-valent R0", bip4_order, lhs - rhs));
    }
    {  // 3-constellation with hexavalent black vertices, h = g^2 gt2 = t^3:
        // R_0 (1 - 10 h R^3) = R (1 - 17 h R^3 + 25 h^2 R^6)
        int c = 3 * cons3_order;
        auto binding = CouplingBinding::weighted_t({{"g", Rational(1)}, {"gt2", Rational(1)}});
        auto fam = solve_sequences(ModelSpec::constellation(3, {{2, "gt2"}}), c, -1, binding);
        const auto& r0 = fam.at("R", 0);
        const auto& R = fam.at("R", fam.n_max);
        auto one = TruncatedSeries::constant({"t"}, c, Rational(1));
        auto h = mono({"t"}, c, {3});
        auto R3 = R * R * R;
        auto lhs = r0 * (one - h.scaled(Rational(10)) * R3);
        auto rhs = R * (one - h.scaled(Rational(17)) * R3 + (h * h * R3 * R3).scaled(Rational(25)));
        out.push_back(report("3-constellation R0", cons3_order, lhs - rhs));
    }
    return out;
}

bool one_root_quartic_identity_holds() {
    // With u_{n+k} = 1 - L x^{k+1}, R = P/Q, g R^2 = x/Q, P = 1+4x+x^2,
    // Q = 1+x+x^2, the recursion collapses to P*L4 - Q*A - x*B = 0 where
    // L4 = u_0 u_1 u_2 u_3, A = u_1^2 u_2^2,
    // B = u_{-1} u_2^2 u_3 + u_0^2 u_3^2 + u_0 u_1^2 u_4.
    const int c = 20;
    std::vector<std::string> vars{"L", "x"};
    auto one = TruncatedSeries::constant(vars, c, Rational(1));
    auto u = [&](int k) {
        ExpVec e{1, k + 1};
        return one - TruncatedSeries::monomial(vars, c, e, Rational(1));
    };
    auto xmon = [&](int j, long coef) {
        return TruncatedSeries::monomial(vars, c, ExpVec{0, j}, Rational(coef));
    };
    auto P = xmon(0, 1) + xmon(1, 4) + xmon(2, 1);
    auto Q = xmon(0, 1) + xmon(1, 1) + xmon(2, 1);
    auto L4 = u(0) * u(1) * u(2) * u(3);
    auto A = u(1) * u(1) * u(2) * u(2);
    auto B = u(-1) * u(2) * u(2) * u(3) + u(0) * u(0) * u(3) * u(3) + u(0) * u(1) * u(1) * u(4);
    auto diff = P * L4 - Q * A - xmon(1, 1) * B;
    return diff.is_zero();
}

}  // namespace mapdist
