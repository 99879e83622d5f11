#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <complex>

#include "mapdist/errors.hpp"
#include "mapdist/jet.hpp"
#include "mapdist/polynomial.hpp"
#include "mapdist/rational.hpp"
#include "mapdist/series.hpp"

using namespace mapdist;

namespace {

TruncatedSeries uni(int cutoff) { return TruncatedSeries({"g"}, cutoff); }

TruncatedSeries uni_from(std::initializer_list<long> coeffs, int cutoff) {
    TruncatedSeries s({"g"}, cutoff);
    int d = 0;
    for (long c : coeffs) s.set_coeff({d++}, Rational(c));
    return s;
}

// deterministic small PRNG for property tests
struct Lcg {
    unsigned long long s = 0x243f6a8885a308d3ull;
    unsigned next() {
        s = s * 6364136223846793005ull + 1442695040888963407ull;
        return static_cast<unsigned>(s >> 33);
    }
    int range(int lo, int hi) { return lo + static_cast<int>(next() % (hi - lo + 1)); }
};

TruncatedSeries random_series(Lcg& rng, int cutoff) {
    TruncatedSeries s({"a", "b"}, cutoff);
    for (int i = 0; i < 8; ++i) {
        int e0 = rng.range(0, cutoff);
        int e1 = rng.range(0, cutoff - e0);
        s.set_coeff({e0, e1}, Rational(rng.range(-3, 3), rng.range(1, 4)));
    }
    return s;
}

}  // namespace

TEST_CASE("rational invariants and parsing") {
    Rational r(6, -4);
    CHECK(r.num_str() == "-3");
    CHECK(r.den_str() == "2");
    CHECK(Rational::parse("1/24") == Rational(1, 24));
    CHECK(Rational::parse("-0.25") == Rational(-1, 4));
    CHECK(Rational::parse("10") == Rational(10));
    CHECK(Rational::parse("3.125") == Rational(25, 8));
    CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
    CHECK(Rational(2, 3) * Rational(3, 2) == Rational(1));
    CHECK_THROWS_AS(Rational(1, 0), usage_error);
    CHECK(Rational::binomial(5, 2) == Rational(10));
    CHECK(Rational::binomial(15, 5) == Rational(3003));
}

TEST_CASE("series product: binomial, identity, cube") {
    auto a = uni_from({1, 3}, 2);  // 1 + 3g
    auto sq = a * a;
    CHECK(sq == uni_from({1, 6, 9}, 2));

    auto one = TruncatedSeries::constant({"g"}, 2, Rational(1));
    CHECK(a * one == a);

    auto r = uni_from({1, 3, 18}, 2);
    CHECK(r * r * r == uni_from({1, 9, 81}, 2));

    auto other = TruncatedSeries({"h"}, 2);
    CHECK_THROWS_AS(a * other, usage_error);
}

TEST_CASE("series ring axioms on random series") {
    Lcg rng;
    for (int trial = 0; trial < 20; ++trial) {
        auto x = random_series(rng, 6);
        auto y = random_series(rng, 6);
        auto z = random_series(rng, 6);
        CHECK((x * y) * z == x * (y * z));
        CHECK(x * (y + z) == x * y + x * z);
        CHECK(x * y == y * x);
        CHECK(x + (y + z) == (x + y) + z);
    }
}

TEST_CASE("series inverse") {
    auto s = uni_from({1, -4, 2, 7}, 5);
    auto inv = s.inverse();
    CHECK(s * inv == TruncatedSeries::constant({"g"}, 5, Rational(1)));
    CHECK_THROWS_AS(uni_from({0, 1}, 3).inverse(), usage_error);
}

TEST_CASE("fixed point of quadratic map gives ternary-tree counts") {
    auto g = TruncatedSeries::variable({"g"}, 3, 0);
    auto one = TruncatedSeries::constant({"g"}, 3, Rational(1));
    auto sol = series_solve_fixed_point(
        [&](const TruncatedSeries& x) { return one + g.scaled(Rational(3)) * (x * x); },
        uni(3), 3);
    CHECK(sol == uni_from({1, 3, 18, 135}, 3));  // 3^N * Catalan(N)

    auto id = series_solve_fixed_point([&](const TruncatedSeries&) { return one; },
                                       uni_from({5, 5}, 3), 3);
    CHECK(id == one);
}

TEST_CASE("fixed point in two couplings (bicolored cubic trees)") {
    std::vector<std::string> vars{"g", "gt"};
    auto g = TruncatedSeries::variable(vars, 6, 0);
    auto gt = TruncatedSeries::variable(vars, 6, 1);
    auto one = TruncatedSeries::constant(vars, 6, Rational(1));
    auto sol = series_solve_fixed_point(
        [&](const TruncatedSeries& x) { return one + (g * gt).scaled(Rational(2)) * (x * x); },
        TruncatedSeries(vars, 6), 6);
    CHECK(sol.coeff({0, 0}) == Rational(1));
    CHECK(sol.coeff({1, 1}) == Rational(2));    // 2^1 * c_1
    CHECK(sol.coeff({2, 2}) == Rational(8));    // 2^2 * c_2
    CHECK(sol.coeff({3, 3}) == Rational(40));   // 2^3 * c_3
    CHECK(sol.coeff({1, 0}) == Rational(0));
}

TEST_CASE("fixed point rejects non-contractive maps") {
    auto one = TruncatedSeries::constant({"g"}, 3, Rational(1));
    CHECK_THROWS_AS(series_solve_fixed_point(
                        [&](const TruncatedSeries& x) { return x + one; }, uni(3), 3),
                    structural_error);
}

TEST_CASE("fixed point re-substitution reproduces itself") {
    auto g = TruncatedSeries::variable({"g"}, 8, 0);
    auto one = TruncatedSeries::constant({"g"}, 8, Rational(1));
    auto f = [&](const TruncatedSeries& x) { return one + g.scaled(Rational(3)) * (x * x); };
    auto sol = series_solve_fixed_point(f, uni(8), 8);
    CHECK(f(sol) == sol);
}

TEST_CASE("series evaluation by Horner") {
    auto s = uni_from({1, 2, 3}, 2);
    double xs[] = {0.5};
    CHECK(s.evaluate(xs) == doctest::Approx(1 + 1 + 0.75).epsilon(1e-15));
    std::vector<std::string> vars{"a", "b"};
    TruncatedSeries t(vars, 3);
    t.set_coeff({1, 2}, Rational(6));
    t.set_coeff({0, 1}, Rational(-2));
    double p[] = {2.0, 0.5};
    CHECK(t.evaluate(p) == doctest::Approx(6 * 2 * 0.25 - 1.0).epsilon(1e-15));
}

TEST_CASE("polynomial roots: simple cases") {
    CPoly p({std::vector<Complex>{Complex(-1), Complex(0), Complex(1)}});  // x^2 - 1
    auto roots = poly_roots(p);
    REQUIRE(roots.size() == 2);
    std::sort(roots.begin(), roots.end(),
              [](Complex a, Complex b) { return a.real() < b.real(); });
    CHECK(std::abs(roots[0] - Complex(-1)) < 1e-10);
    CHECK(std::abs(roots[1] - Complex(1)) < 1e-10);

    // u^2 - 10u + 30 = 0 -> 5 +- i sqrt(5)
    CPoly q({std::vector<Complex>{Complex(30), Complex(-10), Complex(1)}});
    auto qr = poly_roots(q);
    std::sort(qr.begin(), qr.end(), [](Complex a, Complex b) { return a.imag() < b.imag(); });
    CHECK(std::abs(qr[0] - Complex(5, -std::sqrt(5.0))) < 1e-10);
    CHECK(std::abs(qr[1] - Complex(5, std::sqrt(5.0))) < 1e-10);
}

TEST_CASE("unit disk filter and reciprocal quartic") {
    // x^2 - (5/2)x + 1: roots 2 and 1/2
    CPoly p({std::vector<Complex>{Complex(1), Complex(-2.5), Complex(1)}});
    auto in = roots_in_unit_disk(p);
    REQUIRE(in.size() == 1);
    CHECK(std::abs(in[0] - Complex(0.5)) < 1e-12);

    // quartic characteristic of the two-coupling even-valence model at small
    // couplings: x^2 * (1 - g4 R (x + 1/x + 4) - g6 R^2 (x^2+6x+16+6/x+1/x^2))
    double g4 = 0.01, g6 = 0.001;
    double R = 1.0;
    for (int i = 0; i < 200; ++i) R = 1 + 3 * g4 * R * R + 10 * g6 * R * R * R;
    std::vector<Complex> c{
        Complex(-g6 * R * R), Complex(-g4 * R - 6 * g6 * R * R),
        Complex(1 - 4 * g4 * R - 16 * g6 * R * R), Complex(-g4 * R - 6 * g6 * R * R),
        Complex(-g6 * R * R)};
    CPoly quartic(std::move(c));
    CHECK(is_palindromic(quartic));
    auto all = poly_roots(quartic);
    // root multiset closed under x -> 1/x
    for (const auto& r : all) {
        double best = 1e9;
        for (const auto& s : all) best = std::min(best, std::abs(s - Complex(1) / r));
        CHECK(best < 1e-10);
    }
    auto disk = roots_in_unit_disk(quartic);
    CHECK(disk.size() == 2);
    for (const auto& r : disk) CHECK(std::abs(r) < 1.0);
}

TEST_CASE("quadrivalent characteristic root near criticality matches closed form") {
    double eps = 0.3;
    double gc = 1.0 / 12.0;
    double g = gc * (1 - std::pow(eps, 4));
    double R = 2.0 / (1 + eps * eps);
    // 1 - gR(x + 1/x + 4) = 0, times x: -gR x^2 + (1-4gR)x - gR
    CPoly p({std::vector<Complex>{Complex(-g * R), Complex(1 - 4 * g * R), Complex(-g * R)}});
    auto in = roots_in_unit_disk(p);
    REQUIRE(in.size() == 1);
    double x_closed = (1 + 2 * eps * eps - eps * std::sqrt(3 * (2 + eps * eps))) / (1 - eps * eps);
    CHECK(std::abs(in[0] - Complex(x_closed)) < 1e-10);
}

TEST_CASE("roots on the unit circle raise the degenerate-input error") {
    // (x-1)(x-1/2) has a root exactly on the circle
    CPoly p({std::vector<Complex>{Complex(0.5), Complex(-1.5), Complex(1)}});
    CHECK_THROWS_AS(roots_in_unit_disk(p), domain_error);
}

TEST_CASE("chebyshev U basics") {
    auto u2 = chebyshev_u_poly(2);
    CHECK(u2.coeff(0) == Rational(-1));
    CHECK(u2.coeff(1) == Rational(0));
    CHECK(u2.coeff(2) == Rational(1));
    for (int n = 0; n <= 30; ++n) CHECK(chebyshev_u(n, 2.0) == doctest::Approx(n + 1).epsilon(1e-12));
    CHECK(chebyshev_u(-1, 0.7) == 0.0);
}

TEST_CASE("chebyshev U half-power identity") {
    Lcg rng;
    for (int trial = 0; trial < 10; ++trial) {
        double x = 0.05 + 0.9 * (rng.range(0, 1000) / 1000.0);
        double sq = std::sqrt(x);
        double w = sq + 1.0 / sq;
        for (int n : {1, 3, 7, 15, 30}) {
            double lhs = chebyshev_u(n, w) * (sq - 1.0 / sq);
            double rhs = std::pow(x, (n + 1) / 2.0) - std::pow(x, -(n + 1) / 2.0);
            CHECK(std::abs(lhs - rhs) < 1e-12 * std::max(1.0, std::abs(rhs)));
        }
    }
    // U_3(sqrt x + 1/sqrt x)(sqrt x - 1/sqrt x) = x^2 - x^-2 at a spot value
    double x = 0.37;
    double sq = std::sqrt(x);
    CHECK(chebyshev_u(3, sq + 1 / sq) * (sq - 1 / sq) ==
          doctest::Approx(x * x - 1 / (x * x)).epsilon(1e-13));
}

TEST_CASE("jets: sinh at the origin") {
    auto r = DJet::variable(0.0, 5);
    auto s = sinh(r);
    CHECK(s.derivative(0) == 0.0);
    CHECK(s.derivative(1) == doctest::Approx(1.0));
    CHECK(s.derivative(2) == doctest::Approx(0.0));
    CHECK(s.derivative(3) == doctest::Approx(1.0));
    CHECK(s.derivative(4) == doctest::Approx(0.0));
    CHECK(s.derivative(5) == doctest::Approx(1.0));
}

TEST_CASE("jets: log of sinh, analytic second derivative") {
    auto r = DJet::variable(1.0, 4);
    auto f = log(sinh(r));
    double sh = std::sinh(1.0);
    CHECK(f.derivative(2) == doctest::Approx(-1.0 / (sh * sh)).epsilon(1e-13));
}

TEST_CASE("jets match Richardson finite differences on a composite") {
    auto f = [](double r) { return 3.0 / std::pow(std::sinh(std::sqrt(1.5) * r), 2); };
    auto jet_at = [](double r) {
        auto x = DJet::variable(r, 6);
        auto s = sinh(std::sqrt(1.5) * x);
        return DJet::constant(3.0, 6) / (s * s);
    };
    for (double r : {0.7, 1.0, 1.9}) {
        auto j = jet_at(r);
        CHECK(j.value() == doctest::Approx(f(r)).epsilon(1e-14));
        // first derivative: central difference + one Richardson step
        for (double h : {1e-3}) {
            double d1 = (f(r + h) - f(r - h)) / (2 * h);
            double d1h = (f(r + h / 2) - f(r - h / 2)) / h;
            double rich = (4 * d1h - d1) / 3;
            CHECK(std::abs(j.derivative(1) - rich) < 1e-7 * std::max(1.0, std::abs(rich)));
        }
        // second derivative via central stencil on first derivatives of the jet
        double h = 1e-4;
        double d2 = (jet_at(r + h).derivative(1) - jet_at(r - h).derivative(1)) / (2 * h);
        CHECK(std::abs(j.derivative(2) - d2) < 1e-6 * std::max(1.0, std::abs(d2)));
    }
    // spot check: derivative at r=1 against plain central difference within 1e-8
    double h = 1e-5, r = 1.0;
    double fd = (f(r + h) - f(r - h)) / (2 * h);
    CHECK(std::abs(jet_at(r).derivative(1) - fd) < 1e-8 * std::max(1.0, std::abs(fd)));
}

TEST_CASE("complex jets agree with real jets on the real axis") {
    auto xr = DJet::variable(0.8, 6);
    auto xc = CJet::variable(Complex(0.8, 0.0), 6);
    auto fr = log(sinh(xr) * sinh(xr));
    auto fc = log(sinh(xc) * sinh(xc));
    for (int k = 0; k <= 6; ++k) {
        CHECK(fc.taylor(k).imag() == doctest::Approx(0.0).epsilon(1e-12));
        CHECK(fc.taylor(k).real() == doctest::Approx(fr.taylor(k)).epsilon(1e-12));
    }
}

#include "mapdist/series_json.hpp"

TEST_CASE("series JSON round trip and schema") {
    std::vector<std::string> vars{"g", "gt"};
    TruncatedSeries s(vars, 5);
    s.set_coeff({1, 2}, Rational(-7, 3));
    s.set_coeff({0, 0}, Rational(1));
    auto text = series_to_json(s);
    CHECK(text.find("\"variables\":[\"g\",\"gt\"]") != std::string::npos);
    CHECK(text.find("\"num\":\"-7\"") != std::string::npos);
    CHECK(text.find("\"den\":\"3\"") != std::string::npos);
    CHECK(series_from_json(text) == s);
    // serialization is deterministic
    CHECK(series_to_json(s) == text);
}
