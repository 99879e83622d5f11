#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "mapdist/characteristic.hpp"
#include "mapdist/errors.hpp"
#include "mapdist/limits.hpp"
#include "mapdist/model.hpp"
#include "mapdist/one_x.hpp"
#include "mapdist/sequence_solver.hpp"
#include "mapdist/special_values.hpp"
#include "mapdist/tau.hpp"

using namespace mapdist;

namespace {

double eval_series_at(const TruncatedSeries& s, double t) {
    double p[] = {t};
    return s.evaluate(p);
}

}  // namespace

TEST_CASE("numeric limits: quadrivalent closed form") {
    double g = 1.0 / 24.0;
    auto lims = solve_limits(ModelSpec::tetravalent(), {{"g", g}});
    double closed = (1.0 - std::sqrt(1.0 - 12.0 * g)) / (6.0 * g);
    CHECK(lims.at("R") == doctest::Approx(closed).epsilon(1e-12));
}

TEST_CASE("numeric limits: trivalent pair and Ising base") {
    auto lims = solve_limits(ModelSpec::trivalent(), {{"g", 0.1}});
    double R = lims.at("R"), S = lims.at("S");
    CHECK(S == doctest::Approx(0.2 * R + 0.1 * S * S).epsilon(1e-12));
    CHECK(R == doctest::Approx(1 + 0.2 * R * S).epsilon(1e-12));

    auto il = solve_limits(ModelSpec::ising_symmetric(), {{"c", 0.5}, {"g", 1.0 / 30}});
    CHECK(limits_residual(ModelSpec::ising_symmetric(), {{"c", 0.5}, {"g", 1.0 / 30}}, il) <
          1e-12);
    // g -> 0 base: R -> c/(1-c^2) = 2/3
    auto il0 = solve_limits(ModelSpec::ising_symmetric(), {{"c", 0.5}, {"g", 1e-12}});
    CHECK(il0.at("R") == doctest::Approx(2.0 / 3.0).epsilon(1e-6));
}

TEST_CASE("characteristic equations match the printed forms") {
    {  // quadrivalent: 1 - gR(y + 4)
        double g = 1.0 / 24.0;
        auto lims = solve_limits(ModelSpec::tetravalent(), {{"g", g}});
        auto ce = characteristic_equation(ModelSpec::tetravalent(), {{"g", g}}, lims);
        double R = lims.at("R");
        CHECK(ce.in_w.coeff(0) == doctest::Approx(1 - 4 * g * R).epsilon(1e-12));
        CHECK(ce.in_w.coeff(1) == doctest::Approx(-g * R).epsilon(1e-12));
        REQUIRE(ce.disk_roots.size() == 1);
        CHECK(std::abs(ce.in_x.eval(ce.disk_roots[0])) < 1e-12);
        CHECK(is_palindromic(ce.in_x));
    }
    {  // tetra/hexa: 1 - g4 R (y+4) - g6 R^2 (y^2 + 6y + 14)
        std::map<std::string, double> coup{{"g4", 1.0 / 60}, {"g6", 1.0 / 1000}};
        auto model = ModelSpec::even_valence({{4, "g4"}, {6, "g6"}});
        auto lims = solve_limits(model, coup);
        double R = lims.at("R");
        auto ce = characteristic_equation(model, coup, lims);
        double g4 = coup["g4"], g6 = coup["g6"];
        CHECK(ce.in_w.coeff(2) == doctest::Approx(-g6 * R * R).epsilon(1e-12));
        CHECK(ce.in_w.coeff(1) == doctest::Approx(-g4 * R - 6 * g6 * R * R).epsilon(1e-12));
        CHECK(ce.in_w.coeff(0) ==
              doctest::Approx(1 - 4 * g4 * R - 14 * g6 * R * R).epsilon(1e-12));
        CHECK(ce.disk_roots.size() == 2);
        // root multiset of the x-form is closed under x -> 1/x
        for (const auto& r : poly_roots(ce.in_x)) {
            double best = 1e9;
            for (const auto& s : poly_roots(ce.in_x))
                best = std::min(best, std::abs(s - Complex(1) / r));
            CHECK(best < 1e-10);
        }
    }
    {  // trivalent: 1 - g^2 R^3 (y + 2)
        double g = 0.1;
        auto lims = solve_limits(ModelSpec::trivalent(), {{"g", g}});
        auto ce = characteristic_equation(ModelSpec::trivalent(), {{"g", g}}, lims);
        double R = lims.at("R");
        CHECK(ce.in_w.coeff(1) == doctest::Approx(-g * g * R * R * R).epsilon(1e-12));
        CHECK(ce.in_w.coeff(0) == doctest::Approx(1 - 2 * g * g * R * R * R).epsilon(1e-12));
    }
    {  // bipartite p=4: 1 - g gt R^2 (y + 1)^2
        std::map<std::string, double> coup{{"g", 0.04}, {"gt1", 0.5}};
        auto model = ModelSpec::bipartite_p_valent(4);
        auto lims = solve_limits(model, coup);
        double h = coup["g"] * coup["gt1"], R = lims.at("R");
        auto ce = characteristic_equation(model, coup, lims);
        CHECK(ce.in_w.coeff(0) == doctest::Approx(1 - h * R * R).epsilon(1e-10));
        CHECK(ce.in_w.coeff(1) == doctest::Approx(-2 * h * R * R).epsilon(1e-10));
        CHECK(ce.in_w.coeff(2) == doctest::Approx(-h * R * R).epsilon(1e-10));
    }
    {  // 3-constellation, hexavalent blacks: 1 - g^2 gt2 R^3 (y+2)(y^2+y+4)
        std::map<std::string, double> coup{{"g", 0.1}, {"gt2", 0.05}};
        auto model = ModelSpec::constellation(3, {{2, "gt2"}});
        auto lims = solve_limits(model, coup);
        double h = coup["g"] * coup["g"] * coup["gt2"], R = lims.at("R");
        auto ce = characteristic_equation(model, coup, lims);
        // (y+2)(y^2+y+4) = y^3 + 3y^2 + 6y + 8
        CHECK(ce.in_w.coeff(3) == doctest::Approx(-h * R * R * R).epsilon(1e-10));
        CHECK(ce.in_w.coeff(2) == doctest::Approx(-3 * h * R * R * R).epsilon(1e-10));
        CHECK(ce.in_w.coeff(1) == doctest::Approx(-6 * h * R * R * R).epsilon(1e-10));
        CHECK(ce.in_w.coeff(0) == doctest::Approx(1 - 8 * h * R * R * R).epsilon(1e-10));
        CHECK(ce.disk_roots.size() == 3);
    }
    {  // Ising factors at sample couplings
        std::map<std::string, double> coup{{"c", 0.5}, {"g", 1.0 / 30}};
        auto model = ModelSpec::ising_symmetric();
        auto lims = solve_limits(model, coup);
        auto ce = characteristic_equation(model, coup, lims);
        CHECK(ce.in_w.degree() == 3);
        CHECK(ce.disk_roots.size() == 3);
        auto ws = ising_w_roots(0.5, 1.0 / 30, lims.at("V"));
        for (double w : ws) CHECK(std::abs(ce.in_w.eval(w)) < 1e-10);
    }
}

TEST_CASE("g -> 0 pushes the disk root to the origin") {
    double g = 1e-6;
    auto lims = solve_limits(ModelSpec::tetravalent(), {{"g", g}});
    auto ce = characteristic_equation(ModelSpec::tetravalent(), {{"g", g}}, lims);
    CHECK(std::abs(ce.disk_roots[0]) < 1e-5);
}

TEST_CASE("tau basics") {
    // single root, unit lambda
    TauSolution sol = make_even_valence_tau({Complex(0.3)}, 2.0);
    CHECK(sol.lambda[0] == Complex(1.0));
    CHECK(tau_u(sol, 2).real() == doctest::Approx(1 - 0.027).epsilon(1e-14));
    CHECK(lambda_fixing_residual(sol) < 1e-14);
    // lambda = 0 gives u == 1
    sol.lambda[0] = 0.0;
    for (int n = -3; n <= 3; ++n) CHECK(tau_u(sol, n) == Complex(1.0));
}

TEST_CASE("quadrivalent closed form against the exact series") {
    double g = 1.0 / 24.0;
    auto lims = solve_limits(ModelSpec::tetravalent(), {{"g", g}});
    auto ce = characteristic_equation(ModelSpec::tetravalent(), {{"g", g}}, lims);
    auto sol = make_even_valence_tau(ce.disk_roots, lims.at("R"));

    // R_0 = R - g R^3
    double R = lims.at("R");
    CHECK(closed_R_n(sol, 0) == doctest::Approx(R - g * R * R * R).epsilon(1e-12));
    // large n limit
    CHECK(closed_R_n(sol, 4000) == doctest::Approx(R).epsilon(1e-12));

    auto binding = CouplingBinding::weighted_t({{"g", Rational(1, 24)}});
    auto fam = solve_sequences(ModelSpec::tetravalent(), 40, -1, binding);
    for (int n = 0; n <= 12; ++n)
        CHECK(std::fabs(closed_R_n(sol, n) - eval_series_at(fam.at("R", n), 1.0)) < 1e-8);
}

TEST_CASE("two-root closed form, lambda fixing and Chebyshev determinant") {
    std::map<std::string, double> coup{{"g4", 1.0 / 60}, {"g6", 1.0 / 1000}};
    auto model = ModelSpec::even_valence({{4, "g4"}, {6, "g6"}});
    auto lims = solve_limits(model, coup);
    auto ce = characteristic_equation(model, coup, lims);
    auto sol = make_even_valence_tau(ce.disk_roots, lims.at("R"));
    CHECK(lambda_fixing_residual(sol) < 1e-10);

    auto binding = CouplingBinding::weighted_t(
        {{"g4", Rational(1, 60)}, {"g6", Rational(1, 1000)}});
    auto fam = solve_sequences(model, 40, -1, binding);
    for (int n = 0; n <= 10; ++n) {
        double closed = closed_R_n(sol, n);
        CHECK(std::fabs(closed - eval_series_at(fam.at("R", n), 1.0)) < 1e-8);
        CHECK(std::fabs(closed - chebyshev_det_R_n(ce.disk_roots, lims.at("R"), n)) < 1e-10);
    }
}

TEST_CASE("trivalent closed forms") {
    double g = 0.1;
    auto lims = solve_limits(ModelSpec::trivalent(), {{"g", g}});
    auto ce = characteristic_equation(ModelSpec::trivalent(), {{"g", g}}, lims);
    REQUIRE(ce.disk_roots.size() == 1);
    TrivalentClosedForm cf{g, lims.at("R"), lims.at("S"), ce.disk_roots[0]};
    double R = cf.R, S = cf.S;
    CHECK(cf.r_n(0) == doctest::Approx(R - g * g * std::pow(R, 4)).epsilon(1e-12));
    CHECK(cf.s_n(0) == doctest::Approx(S - g * R * R).epsilon(1e-12));

    auto binding = CouplingBinding::weighted_t({{"g", Rational(1, 10)}});
    auto fam = solve_sequences(ModelSpec::trivalent(), 40, -1, binding);
    for (int n = 0; n <= 10; ++n) {
        CHECK(std::fabs(cf.r_n(n) - eval_series_at(fam.at("R", n), 1.0)) < 1e-8);
        CHECK(std::fabs(cf.s_n(n) - eval_series_at(fam.at("S", n), 1.0)) < 1e-8);
    }
}

TEST_CASE("bipartite closed forms against the exact series") {
    {  // p = 3, one root
        std::map<std::string, double> coup{{"g", 0.1}, {"gt1", 0.5}};
        auto model = ModelSpec::bipartite_p_valent(3);
        auto lims = solve_limits(model, coup);
        auto ce = characteristic_equation(model, coup, lims);
        auto sol = make_bipartite_tau(ce.disk_roots, lims.at("R"), 3);
        CHECK(lambda_fixing_residual(sol) < 1e-12);
        auto binding =
            CouplingBinding::weighted_t({{"g", Rational(1, 10)}, {"gt1", Rational(1, 2)}});
        auto fam = solve_sequences(model, 44, -1, binding);
        for (int n = 0; n <= 10; ++n)
            CHECK(std::fabs(closed_R_n(sol, n) - eval_series_at(fam.at("R", n), 1.0)) < 1e-8);
    }
    {  // p = 4, two roots
        std::map<std::string, double> coup{{"g", 0.04}, {"gt1", 0.5}};
        auto model = ModelSpec::bipartite_p_valent(4);
        auto lims = solve_limits(model, coup);
        auto ce = characteristic_equation(model, coup, lims);
        auto sol = make_bipartite_tau(ce.disk_roots, lims.at("R"), 4);
        CHECK(lambda_fixing_residual(sol) < 1e-10);
        auto binding =
            CouplingBinding::weighted_t({{"g", Rational(1, 25)}, {"gt1", Rational(1, 2)}});
        auto fam = solve_sequences(model, 44, -1, binding);
        for (int n = 0; n <= 10; ++n)
            CHECK(std::fabs(closed_R_n(sol, n) - eval_series_at(fam.at("R", n), 1.0)) < 1e-8);
    }
    {  // 3-constellation, three roots
        std::map<std::string, double> coup{{"g", 0.1}, {"gt2", 0.05}};
        auto model = ModelSpec::constellation(3, {{2, "gt2"}});
        auto lims = solve_limits(model, coup);
        auto ce = characteristic_equation(model, coup, lims);
        auto sol = make_bipartite_tau(ce.disk_roots, lims.at("R"), 3);
        polish_lambdas(sol);
        CHECK(lambda_fixing_residual(sol) < 1e-10);
        auto binding =
            CouplingBinding::weighted_t({{"g", Rational(1, 10)}, {"gt2", Rational(1, 20)}});
        auto fam = solve_sequences(model, 60, -1, binding);
        for (int n = 0; n <= 10; ++n)
            CHECK(std::fabs(closed_R_n(sol, n) - eval_series_at(fam.at("R", n), 1.0)) < 1e-8);
    }
}

TEST_CASE("ratio telescoping") {
    double g = 1.0 / 24.0;
    auto lims = solve_limits(ModelSpec::tetravalent(), {{"g", g}});
    auto ce = characteristic_equation(ModelSpec::tetravalent(), {{"g", g}}, lims);
    auto sol = make_even_valence_tau(ce.disk_roots, lims.at("R"));
    for (int N : {5, 12, 20}) {
        double prod = 1.0;
        for (int n = 0; n <= N; ++n) prod *= closed_R_n(sol, n) / sol.limit;
        Complex expect = tau_u(sol, 0) * tau_u(sol, N + 3) / (tau_u(sol, 2) * tau_u(sol, N + 1));
        CHECK(prod == doctest::Approx(expect.real()).epsilon(1e-10));
    }
}

TEST_CASE("special value identities are exact series identities") {
    auto reports = special_value_identities(10, 6, 8, 6, 6, 4);
    for (const auto& r : reports) {
        INFO(r.name);
        CHECK(r.exact_zero);
    }
}

TEST_CASE("the one-root quartic identity holds as a polynomial identity") {
    CHECK(one_root_quartic_identity_holds());
}

TEST_CASE("one-root family solves the tri/tetra recursion at interior n") {
    CHECK(tritet_root_count(0.02, 0.02) == 2);
    for (int root : {0, 1})
        for (double lambda : {0.7, -0.4}) {
            double res = one_x_residual_tritet(0.02, 0.02, root, lambda, 5, 15);
            CHECK(res < 1e-10);
        }
    CHECK(one_x_residual_tritet(0.02, 0.02, 0, 0.0, 5, 15) < 1e-13);
}

TEST_CASE("one-root family cannot satisfy both tri/tetra boundary conditions") {
    // lambda = 1 kills R_{-1} but not the R S product
    auto [r, rs] = tritet_boundary_defect(0.02, 0.02, 0, 1.0);
    CHECK(std::fabs(r) < 1e-12);
    CHECK(std::fabs(rs) > 1e-4);
    // no lambda on a grid satisfies both
    double best = 1e300;
    for (double lambda = 0.05; lambda <= 2.0; lambda += 0.005) {
        auto [a, b] = tritet_boundary_defect(0.02, 0.02, 0, lambda);
        best = std::min(best, std::max(std::fabs(a), std::fabs(b)));
    }
    CHECK(best > 1e-4);
}

TEST_CASE("Ising one-root branches solve the reduced system at interior n") {
    for (double g : {1.0 / 30, 1.0 / 50})
        for (int branch : {1, 2, 3})
            for (double lambda : {0.3, -0.2}) {
                double res = one_x_residual_ising(0.5, g, branch, lambda, 5, 15);
                INFO("g=" << g << " branch=" << branch << " lambda=" << lambda);
                CHECK(res < 1e-9);
            }
}

TEST_CASE("coincident roots are rejected") {
    CHECK_THROWS_AS(make_even_valence_tau({Complex(0.3), Complex(0.3)}, 2.0),
                    numerical_error);
    CHECK_THROWS_AS(make_bipartite_tau({Complex(0.2), Complex(0.2)}, 1.5, 4),
                    numerical_error);
}

TEST_CASE("telescoping holds for the other ratio windows") {
    {  // bipartite p=4: ratio offsets (0, 5, 1, 4)
        std::map<std::string, double> coup{{"g", 0.04}, {"gt1", 0.5}};
        auto model = ModelSpec::bipartite_p_valent(4);
        auto lims = solve_limits(model, coup);
        auto sol = make_bipartite_tau(
            characteristic_equation(model, coup, lims).disk_roots, lims.at("R"), 4);
        for (int N : {6, 14, 20}) {
            double prod = 1.0;
            for (int n = 0; n <= N; ++n) prod *= closed_R_n(sol, n) / sol.limit;
            Complex expect = tau_u(sol, 0) * tau_u(sol, N + 5) /
                             (tau_u(sol, 4) * tau_u(sol, N + 1));
            CHECK(prod == doctest::Approx(expect.real()).epsilon(1e-10));
        }
    }
    {  // trivalent: ratio offsets (0, 2, 1, 1)
        double g = 0.1;
        auto lims = solve_limits(ModelSpec::trivalent(), {{"g", g}});
        auto ce = characteristic_equation(ModelSpec::trivalent(), {{"g", g}}, lims);
        TrivalentClosedForm cf{g, lims.at("R"), lims.at("S"), ce.disk_roots[0]};
        auto u = [&](long k) { return 1.0 - std::pow(ce.disk_roots[0].real(), double(k + 1)); };
        for (int N : {6, 14, 20}) {
            double prod = 1.0;
            for (int n = 0; n <= N; ++n) prod *= cf.r_n(n) / cf.R;
            CHECK(prod == doctest::Approx(u(0) * u(N + 2) / (u(1) * u(N + 1))).epsilon(1e-10));
        }
    }
}
