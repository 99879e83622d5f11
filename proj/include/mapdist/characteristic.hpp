#pragma once

#include <map>
#include <string>

#include "mapdist/model.hpp"
#include "mapdist/polynomial.hpp"

namespace mapdist {

/// Linearized characteristic equation of a model at numeric couplings and
/// limit values: the polynomial in w = x + 1/x whose unit-disk x-roots set
/// the exponential approach of the distance-indexed solutions to their limit.
struct CharacteristicEquation {
    DPoly in_w;
    CPoly in_x;  // x^deg(in_w) * in_w(x + 1/x), reciprocal
    std::vector<Complex> disk_roots;  // |x| < 1, descending modulus
};

CharacteristicEquation characteristic_equation(const ModelSpec& model,
                                               const std::map<std::string, double>& couplings,
                                               const std::map<std::string, double>& limits);

/// The unit-disk solution of x + 1/x = w.
Complex x_from_w(const Complex& w);

/// Ising characteristic factors: the three w-roots in printed factor order
/// (x1, x2, x3 branches).
std::array<double, 3> ising_w_roots(double c, double g, double V);

}  // namespace mapdist
