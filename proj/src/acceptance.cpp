#include "mapdist/acceptance.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <ostream>
#include <sstream>

#include "mapdist/asymptotics.hpp"
#include "mapdist/census.hpp"
#include "mapdist/characteristic.hpp"
#include "mapdist/diffpoly.hpp"
#include "mapdist/ising_continuum.hpp"
#include "mapdist/limits.hpp"
#include "mapdist/model.hpp"
#include "mapdist/multicritical.hpp"
#include "mapdist/one_x.hpp"
#include "mapdist/scaling.hpp"
#include "mapdist/sequence_solver.hpp"
#include "mapdist/special_values.hpp"
#include "mapdist/tau.hpp"

namespace mapdist::acceptance {

namespace {

struct Check {
    bool pass = true;
    std::ostringstream detail;

    void require(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            if (detail.tellp() > 0) detail << "; ";
            detail << "FAILED: " << what;
        }
    }
    void note(const std::string& s) {
        if (detail.tellp() > 0) detail << "; ";
        detail << s;
    }
};

double eval1(const TruncatedSeries& s, double t) {
    double p[1] = {t};
    return s.evaluate(p);
}

// criterion 1: distance-0 entry equals R - g R^3 as an exact series to
// order 16
void c1(Check& ch) {
    auto fam = solve_sequences(ModelSpec::tetravalent(), 16);
    const auto& r0 = fam.at("R", 0);
    const auto& R = fam.at("R", fam.n_max);
    auto g = TruncatedSeries::variable({"g"}, 16, 0);
    auto diff = r0 - (R - g * R * R * R);
    ch.require(diff.is_zero(), "R0 != R - g R^3 at order 16");
}

// criterion 2: census partial sums against the recursion for N <= 6, and
// contour vs dual distance on all N = 6 trees
void c2(Check& ch) {
    auto fam = solve_sequences(ModelSpec::tetravalent(), 6, 12);
    for (int N = 1; N <= 6; ++N) {
        auto hist = census(OracleFamily::Tetravalent, 0, N);
        for (int n = 0; n <= fam.n_max; ++n) {
            long long sum = 0;
            for (const auto& [d, c] : hist)
                if (d <= n) sum += c;
            ch.require(Rational(sum) == fam.at("R", n).coeff({N}),
                       "census partial sum mismatch at N=" + std::to_string(N) +
                           " n=" + std::to_string(n));
        }
    }
    auto rep = check_distance_identity(OracleFamily::Tetravalent, 0, 6);
    ch.require(rep.trees == 96228, "expected 96228 trees at N=6");
    ch.require(rep.mismatches == 0, "contour vs dual distance mismatches");
    ch.require(rep.euler_failures == 0, "Euler relation failures");
    ch.note(std::to_string(rep.trees) + " trees checked");
}

// criterion 3: enumerated tree counts against the closed product formulas
void c3(Check& ch) {
    for (int N = 0; N <= 6; ++N) {
        long long count = 0;
        for_each_tree(OracleFamily::Tetravalent, 0, N, [&](const BlossomTree&) { ++count; });
        ch.require(Rational(count) == tree_count(OracleFamily::Tetravalent, 0, N),
                   "ternary count mismatch at N=" + std::to_string(N));
    }
    for (int p : {3, 4})
        for (int N = 0; N <= 5; ++N) {
            long long count = 0;
            for_each_tree(OracleFamily::BipartiteP, p, N, [&](const BlossomTree&) { ++count; });
            ch.require(Rational(count) == tree_count(OracleFamily::BipartiteP, p, N),
                       "bipartite count mismatch at p=" + std::to_string(p) +
                           " N=" + std::to_string(N));
        }
}

// criterion 4: closed forms vs order-60 series evaluation, |diff| < 1e-8 for
// n <= 20
void c4(Check& ch) {
    const double tol = 1e-8;
    {  // tetravalent at g = 1/24
        auto model = ModelSpec::tetravalent();
        std::map<std::string, double> coup{{"g", 1.0 / 24}};
        auto lims = solve_limits(model, coup);
        auto sol = make_even_valence_tau(
            characteristic_equation(model, coup, lims).disk_roots, lims.at("R"));
        auto fam = solve_sequences(model, 60, 84,
                                   CouplingBinding::weighted_t({{"g", Rational(1, 24)}}));
        for (int n = 0; n <= 20; ++n)
            ch.require(std::fabs(closed_R_n(sol, n) - eval1(fam.at("R", n), 1.0)) < tol,
                       "quadrivalent closed form at n=" + std::to_string(n));
    }
    {  // trivalent at g = 1/10
        auto model = ModelSpec::trivalent();
        std::map<std::string, double> coup{{"g", 0.1}};
        auto lims = solve_limits(model, coup);
        auto ce = characteristic_equation(model, coup, lims);
        TrivalentClosedForm cf{0.1, lims.at("R"), lims.at("S"), ce.disk_roots[0]};
        auto fam = solve_sequences(model, 60, 84,
                                   CouplingBinding::weighted_t({{"g", Rational(1, 10)}}));
        for (int n = 0; n <= 20; ++n) {
            ch.require(std::fabs(cf.r_n(n) - eval1(fam.at("R", n), 1.0)) < tol,
                       "trivalent closed R at n=" + std::to_string(n));
            ch.require(std::fabs(cf.s_n(n) - eval1(fam.at("S", n), 1.0)) < tol,
                       "trivalent closed S at n=" + std::to_string(n));
        }
    }
    {  // bipartite p=3 at g gt1 = 1/10
        auto model = ModelSpec::bipartite_p_valent(3);
        std::map<std::string, double> coup{{"g", 0.1}, {"gt1", 1.0}};
        auto lims = solve_limits(model, coup);
        auto sol = make_bipartite_tau(
            characteristic_equation(model, coup, lims).disk_roots, lims.at("R"), 3);
        auto fam = solve_sequences(
            model, 120, 144,
            CouplingBinding::weighted_t({{"g", Rational(1, 10)}, {"gt1", Rational(1)}}));
        for (int n = 0; n <= 20; ++n)
            ch.require(std::fabs(closed_R_n(sol, n) - eval1(fam.at("R", n), 1.0)) < tol,
                       "bipartite trivalent closed form at n=" + std::to_string(n));
    }
    {  // two even couplings (m = 2) at g4 = 1/60, g6 = 1/1000
        auto model = ModelSpec::even_valence({{4, "g4"}, {6, "g6"}});
        std::map<std::string, double> coup{{"g4", 1.0 / 60}, {"g6", 1.0 / 1000}};
        auto lims = solve_limits(model, coup);
        auto sol = make_even_valence_tau(
            characteristic_equation(model, coup, lims).disk_roots, lims.at("R"));
        auto fam = solve_sequences(model, 60, 144,
                                   CouplingBinding::weighted_t({{"g4", Rational(1, 60)},
                                                                {"g6", Rational(1, 1000)}}));
        for (int n = 0; n <= 20; ++n)
            ch.require(std::fabs(closed_R_n(sol, n) - eval1(fam.at("R", n), 1.0)) < tol,
                       "tetra/hexa closed form at n=" + std::to_string(n));
    }
    {  // 3-constellation at g = 1/10, gt2 = 1/20
        auto model = ModelSpec::constellation(3, {{2, "gt2"}});
        std::map<std::string, double> coup{{"g", 0.1}, {"gt2", 0.05}};
        auto lims = solve_limits(model, coup);
        auto sol = make_bipartite_tau(
            characteristic_equation(model, coup, lims).disk_roots, lims.at("R"), 3);
        polish_lambdas(sol);
        auto fam = solve_sequences(
            model, 60, 204,
            CouplingBinding::weighted_t({{"g", Rational(1, 10)}, {"gt2", Rational(1, 20)}}));
        for (int n = 0; n <= 20; ++n)
            ch.require(std::fabs(closed_R_n(sol, n) - eval1(fam.at("R", n), 1.0)) < tol,
                       "3-constellation closed form at n=" + std::to_string(n));
    }
}

// criterion 5: distance-0 closed forms as exact series identities
void c5(Check& ch) {
    for (const auto& rep : special_value_identities(16, 10, 12, 12, 10, 8))
        ch.require(rep.exact_zero, rep.name + " identity not exactly zero");
}

// criterion 6: integration-constant fixing drives u_{-k} to zero
void c6(Check& ch) {
    {
        auto model = ModelSpec::even_valence({{4, "g4"}, {6, "g6"}});
        std::map<std::string, double> coup{{"g4", 1.0 / 60}, {"g6", 1.0 / 1000}};
        auto lims = solve_limits(model, coup);
        auto sol = make_even_valence_tau(
            characteristic_equation(model, coup, lims).disk_roots, lims.at("R"));
        double res = lambda_fixing_residual(sol);
        ch.require(res < 1e-10, "even-valence m=2 boundary residual " + std::to_string(res));
    }
    {
        auto model = ModelSpec::bipartite_p_valent(4);
        std::map<std::string, double> coup{{"g", 1.0 / 25}, {"gt1", 0.5}};
        auto lims = solve_limits(model, coup);
        auto sol = make_bipartite_tau(
            characteristic_equation(model, coup, lims).disk_roots, lims.at("R"), 4);
        double res = lambda_fixing_residual(sol);
        ch.require(res < 1e-10, "bipartite p=4 boundary residual " + std::to_string(res));
    }
}

// criterion 7: one-root families solve their recursions at interior n
void c7(Check& ch) {
    for (double lambda : {0.7, -0.4})
        for (int root : {0, 1}) {
            double res = one_x_residual_tritet(0.02, 0.02, root, lambda, 5, 15);
            ch.require(res < 1e-9, "tri/tetra one-root residual " + std::to_string(res));
        }
    for (int branch : {1, 2, 3})
        for (double lambda : {0.3, -0.2}) {
            double res = one_x_residual_ising(0.5, 1.0 / 30, branch, lambda, 5, 15);
            ch.require(res < 1e-9, "spin-model branch " + std::to_string(branch) +
                                       " residual " + std::to_string(res));
        }
}

// criterion 8: the invariant of consecutive entries stays constant to
// order 14
void c8(Check& ch) {
    auto model = ModelSpec::tetravalent();
    auto binding = CouplingBinding::formal(model.coupling_names());
    auto fam = solve_sequences(model, 14);
    auto vals = integral_of_motion(fam, binding);
    for (size_t i = 1; i < vals.size(); ++i)
        ch.require(vals[i] == vals[0],
                   "invariant drifts at n=" + std::to_string(i));
}

// criterion 9: five-sequence and reduced spin systems agree; duality holds
void c9(Check& ch) {
    int cutoff = 8;
    auto eqs5 = build_recursion_system(ModelSpec::ising_symmetric());
    auto eqs2 = ising_reduced_system();
    int n_max = std::max(default_n_max(eqs5, cutoff), default_n_max(eqs2, cutoff));
    auto binding = CouplingBinding::formal_with_numeric({"g"}, {{"c", Rational(1, 2)}});
    auto fam5 = solve_system(eqs5, cutoff, n_max, binding);
    auto fam2 = solve_system(eqs2, cutoff, n_max, binding);
    for (int n = 0; n <= n_max; ++n) {
        ch.require(fam5.at("R", n) == fam2.at("R", n), "R mismatch at n=" + std::to_string(n));
        ch.require(fam5.at("V", n) == fam2.at("V", n), "V mismatch at n=" + std::to_string(n));
    }
    for (int n = 0; n < n_max; ++n)
        ch.require(fam5.at("R", n) == fam5.at("V", n) * fam5.at("X1", n + 1),
                   "duality fails at n=" + std::to_string(n));
}

// criterion 10: continuum flow equations
void c10(Check& ch) {
    auto grid = uniform_grid(0.3, 6.0, 40);
    double r1 = ode_residual_max(ScalingFunction::pure_gravity(), stationary_ode(1), grid);
    ch.require(r1 < 1e-9, "pure-gravity residual " + std::to_string(r1));
    double r2 = ode_residual_max(ScalingFunction::wronskian(2), stationary_ode(2), grid);
    ch.require(r2 < 1e-7, "m=2 Wronskian residual " + std::to_string(r2));
    double ri = ode_residual_max(ScalingFunction::ising_sinh(), ising_ode(), grid);
    ch.require(ri < 1e-7, "spin-model residual " + std::to_string(ri));
    // printed constants solve the equation as well (free integration
    // constants)
    auto printed = ScalingFunction::ising_series(-12.0 * (17.0 + 12.0 * std::sqrt(2.0)),
                                                 12.0 * (4.0 + 3.0 * std::sqrt(2.0)));
    double rp = ode_residual_max(printed, ising_ode(), uniform_grid(1.0, 6.0, 20));
    ch.require(rp < 1e-7, "series-form residual " + std::to_string(rp));

    auto ode1 = stationary_ode(1);
    ch.require(ode1.coeff({0, 0, 1}) == Rational(1) && ode1.coeff({2}) == Rational(-3) &&
                   ode1.coeff({1}) == Rational(-6) && ode1.terms().size() == 3,
               "order-2 flow coefficients");
    auto ode2 = stationary_ode(2);
    ch.require(ode2.coeff({0, 0, 0, 0, 1}) == Rational(1) &&
                   ode2.coeff({1, 0, 1}) == Rational(-10) &&
                   ode2.coeff({0, 0, 1}) == Rational(-10) &&
                   ode2.coeff({0, 2}) == Rational(-5) && ode2.coeff({3}) == Rational(10) &&
                   ode2.coeff({2}) == Rational(30) && ode2.coeff({1}) == Rational(30) &&
                   ode2.terms().size() == 7,
               "order-4 flow coefficients");
}

// criterion 11: critical data
void c11(Check& ch) {
    auto data = ising_critical_data();
    ch.require(std::fabs(data.c - 4.0) < 1e-8, "c_c");
    ch.require(std::fabs(data.g - 10.0 / 9.0) < 1e-8, "g_c");
    ch.require(std::fabs(data.R + 0.6) < 1e-8, "R_c");
    ch.require(std::fabs(data.V + 0.3) < 1e-8, "V_c");
    ch.require(ising_quintic_exact_at_critical(), "exact rational quintic conditions");

    auto d1 = multicritical_data(1);
    ch.require(d1.a.size() == 1 &&
                   std::abs(d1.a[0] - Complex(std::sqrt(6.0))) < 1e-12,
               "m=1 rate");
    auto f = ScalingFunction::pure_gravity();
    auto w1 = ScalingFunction::wronskian(1);
    for (double r = 0.1; r <= 8.0; r += 0.2)
        ch.require(std::fabs(f.value(r) - w1.value(r)) < 1e-12 * (1 + std::fabs(f.value(r))),
                   "m=1 Wronskian form at r=" + std::to_string(r));
}

// criterion 12: asymptotics and fractality at property level
void c12(Check& ch) {
    double target = 1.0 / std::sqrt(M_PI);
    double val = coefficient_asymptotics(100000);
    ch.require(std::fabs(val - target) < 0.01 * target, "coefficient asymptote");

    auto ratios = fractal_ratios(3, {500, 1000, 2000});
    double law = 3.0 / 56.0 * 81.0;
    bool increasing_toward =
        ratios[0] < ratios[1] && ratios[1] < ratios[2] &&
        std::fabs(ratios[2] - law) < std::fabs(ratios[0] - law);
    ch.require(increasing_toward, "ratio not increasing toward (3/56) n^4");
    ch.require(std::fabs(ratios[2] - law) < 0.25 * law,
               "ratio " + std::to_string(ratios[2]) + " not within 25% of " +
                   std::to_string(law));
    // the exact n = 3 limit of the coefficient ratio is
    // ratio0(3) (1/15 - Q4/80 + Q6/840) / (4/3) = 43.16, of which (3/56) n^4
    // is only the large-n asymptote; see the singular expansion of the
    // closed form
    ch.note("ratio(3, N=500,1000,2000) = " + std::to_string(ratios[0]) + ", " +
            std::to_string(ratios[1]) + ", " + std::to_string(ratios[2]) +
            "; exact large-N limit 43.16, (3/56) n^4 = " + std::to_string(law));

    double prev = 0.0;
    for (double r = 0.2; r <= 4.01; r += 0.2) {
        double p = distance_probability(r);
        ch.require(p >= prev - 1e-12 && p >= -1e-12 && p <= 1.0 + 1e-9,
                   "probability not monotone in [0,1] at r=" + std::to_string(r));
        prev = p;
    }
    ch.require(distance_probability(10.0) > 0.999, "P(10) <= 0.999");
}

}  // namespace

std::vector<CriterionResult> run_all(std::ostream* live) {
    using Fn = std::function<void(Check&)>;
    const std::pair<std::string, Fn> table[] = {
        {"distance-0 identity, order 16", c1},
        {"oracle census and distance identity, N <= 6", c2},
        {"tree counts vs closed formulas", c3},
        {"closed forms vs order-60 series, n <= 20", c4},
        {"distance-0 special values, exact orders", c5},
        {"integration-constant fixing", c6},
        {"one-root interior residuals", c7},
        {"integral of motion, order 14", c8},
        {"spin-model system consistency and duality", c9},
        {"continuum flow equations", c10},
        {"critical data", c11},
        {"asymptotics and fractality", c12},
    };
    std::vector<CriterionResult> out;
    int id = 0;
    for (const auto& [name, fn] : table) {
        ++id;
        Check ch;
        auto start = std::chrono::steady_clock::now();
        try {
            fn(ch);
        } catch (const std::exception& e) {
            ch.pass = false;
            ch.note(std::string("exception: ") + e.what());
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                          .count();
        CriterionResult res{id, name, ch.pass, ch.detail.str(), secs};
        if (live) {
            (*live) << (res.pass ? "PASS" : "FAIL") << " criterion " << id << ": " << name;
            if (!res.detail.empty()) (*live) << " (" << res.detail << ")";
            (*live) << "\n";
            live->flush();
        }
        out.push_back(std::move(res));
    }
    return out;
}

}  // namespace mapdist::acceptance
