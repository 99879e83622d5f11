#pragma once

#include <map>
#include <vector>

#include "mapdist/rational.hpp"

namespace mapdist {

/// Tricritical data of the spin-decorated tetravalent ensemble.
struct IsingCriticalData {
    double c, g, R, V;
    double rate_slow, rate_fast;  // decay rates of the two branches reaching 1
};

/// Solves W(R) = W'(R) = W''(R) = 0 numerically for (c, g, R).
IsingCriticalData ising_critical_data();

/// Exact rational check: the quintic and its first two derivatives vanish at
/// (c, g, R) = (4, 10/9, -3/5).
bool ising_quintic_exact_at_critical();

/// The middle characteristic factor at criticality, as the exact value of
/// its w-root (expected -10, i.e. the factor x + 1/x + 10).
Rational ising_middle_factor_root_at_critical();

/// Pointwise difference between the sinh and resummed-series forms of the
/// scaling function over the grid (the series form takes the constants that
/// reproduce the sinh combination).
double ising_scaling_equivalence(const std::vector<double>& grid);

/// The integration constants under which the series form reproduces the
/// sinh form: lambda = 12(4 + 3 sqrt 2), mu = -12(17 + 12 sqrt 2).
std::pair<double, double> ising_series_constants();

/// Spin-model weight substitution: chain weights e^K, vertex weights
/// (1 - e^{2K})^2 g e^{+-H}, and the external-leg factor 1/sqrt(1 - e^{2K}).
struct IsingWeights {
    double g2, gt2, g4, gt4, leg;
    double w_bb, w_ww, w_bw;  // resummed edge weights
};
IsingWeights ising_weight_map(double K, double H, double g);

}  // namespace mapdist
