#pragma once

#include <vector>

#include "mapdist/diffpoly.hpp"
#include "mapdist/jet.hpp"
#include "mapdist/polynomial.hpp"

namespace mapdist {

/// Continuum two-point scaling functions F(r) with F(0+) = infinity and
/// F(infinity) = 0, evaluated with their derivatives through jet arithmetic.
class ScalingFunction {
  public:
    enum class Kind {
        PureGravity,   // 3 / sinh^2(sqrt(3/2) r)
        Wronskian,     // -2 (log W(sinh(a_i r / 2)))''
        IsingSinh,     // -(log B(r))'' with the three-term sinh combination
        IsingSeries,   // -(log A(r))'' with free constants lambda, mu
    };

    static ScalingFunction pure_gravity();
    static ScalingFunction wronskian(int m);
    static ScalingFunction ising_sinh();
    static ScalingFunction ising_series(double lambda, double mu);
    /// The series form with the constants that reproduce the sinh form,
    /// carried in extended precision.
    static ScalingFunction ising_series_matched();

    /// Value and derivatives of F at r > 0, through the requested order <= 6.
    DJet jet(double r, int order) const;
    double value(double r) const { return jet(r, 0).value(); }
    double derivative(double r, int k) const { return jet(r, k).derivative(k); }

    /// Complex continuation of the pure-gravity function (used by the
    /// distance-probability quadrature).
    static Complex pure_gravity_value(const Complex& z);

    Kind kind() const { return kind_; }

  private:
    Kind kind_ = Kind::PureGravity;
    std::vector<Complex> rates_;       // Wronskian a_i
    long double lambda_ = 0, mu_ = 0;  // series-form constants
};

/// Max |ODE(F)| over the grid, evaluating the differential polynomial on the
/// jets of F.
double ode_residual_max(const ScalingFunction& f, const DiffPoly& ode,
                        const std::vector<double>& grid);

std::vector<double> uniform_grid(double lo, double hi, int points);

}  // namespace mapdist
