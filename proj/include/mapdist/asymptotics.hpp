#pragma once

#include <vector>

namespace mapdist {

/// N^{3/2} 12^{-N} 3^N c_N computed through log-gamma; approaches 1/sqrt(pi).
double coefficient_asymptotics(long N);

/// Probability that two marked points of a large random surface lie within
/// rescaled distance r: the Gaussian-weighted quadrature of 1 + Re F over the
/// rotated contour, normalized to 1 at infinity.
double distance_probability(double r, int max_panels = 200);

/// Coefficient ratio [g^N] R_n / [g^N] R_0 from the recursion solved in
/// rescaled double-precision coefficient arithmetic; one pass serves all
/// requested orders.  Compares against the quartic growth law (3/56) n^4.
std::vector<double> fractal_ratios(int n, const std::vector<int>& orders);
double fractal_ratio(int n, int N);

}  // namespace mapdist
