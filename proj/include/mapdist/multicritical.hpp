#pragma once

#include <vector>

#include "mapdist/polynomial.hpp"
#include "mapdist/rational.hpp"

namespace mapdist {

/// Multicritical point data of the even-valence hierarchy: the degree-m
/// polynomial P_m whose root square-roots set the decay rates a_i, plus the
/// critical couplings and the fractal dimension 2(m+1).
struct MulticriticalData {
    int m = 1;
    RPoly p_m;                // P_m(u) = sum_l (-u)^l l!/(2l+1)! m!/(m-l)!
    std::vector<Complex> a;   // sqrt of the roots of P_m, positive real part
    Rational g_c, V_c, R_c;
    int d_f = 4;
};

MulticriticalData multicritical_data(int m);

}  // namespace mapdist
