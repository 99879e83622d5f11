#pragma once

#include <map>
#include <string>

#include "mapdist/model.hpp"

namespace mapdist {

/// Numeric solution of a model's distance-free algebraic system at given
/// coupling values, on the power-series branch (R-type values near 1).
/// Fixed-point iteration with damping, then residual validation.
std::map<std::string, double> solve_limits(const ModelSpec& model,
                                           const std::map<std::string, double>& couplings,
                                           double tol = 1e-14);

/// Residual of the distance-free system at the given values.
double limits_residual(const ModelSpec& model, const std::map<std::string, double>& couplings,
                       const std::map<std::string, double>& values);

}  // namespace mapdist
