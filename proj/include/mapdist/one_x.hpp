#pragma once

#include <utility>

#include "mapdist/model.hpp"

namespace mapdist {

/// Number of unit-disk roots of the mixed tri/tetravalent characteristic
/// equation at the given couplings.
int tritet_root_count(double g3, double g4);

/// Residual of the tri/tetravalent pair recursion over interior n under the
/// one-root solution family with a free integration constant.
double one_x_residual_tritet(double g3, double g4, int root_index, double lambda, int n_lo,
                             int n_hi);

/// (R_{-1}, lim_{n -> -1} R_n S_n) for the one-root family: the pair of
/// boundary conditions a complete solution must satisfy simultaneously.
std::pair<double, double> tritet_boundary_defect(double g3, double g4, int root_index,
                                                 double lambda);

/// Residual of the symmetric-Ising reduced system under the one-root
/// solution of the chosen characteristic branch (1, 2 or 3).  Branch 3 uses
/// the quadratic-in-x^n form with its auxiliary constant z; its R side is
/// obtained as the bounded solution of the linear second equation.
double one_x_residual_ising(double c, double g, int branch, double lambda, int n_lo, int n_hi);

}  // namespace mapdist
