#pragma once

#include <map>
#include <string>
#include <vector>

#include "mapdist/rational.hpp"

namespace mapdist {

/// Differential polynomial in one dependent variable u(r): exact rational
/// combinations of monomials prod_j (u^(j))^{e_j}.  Closed under product and
/// d/dr; formal integration succeeds exactly on total derivatives.
class DiffPoly {
  public:
    using Mono = std::vector<int>;  // exponent e_j by derivative order, trimmed

    DiffPoly() = default;

    static DiffPoly constant(const Rational& c);
    static DiffPoly u_derivative(int order, int power = 1);

    bool is_zero() const { return terms_.empty(); }
    const std::map<Mono, Rational>& terms() const { return terms_; }
    Rational coeff(const Mono& m) const;
    int max_order() const;

    friend DiffPoly operator+(const DiffPoly& a, const DiffPoly& b);
    friend DiffPoly operator-(const DiffPoly& a, const DiffPoly& b);
    friend DiffPoly operator*(const DiffPoly& a, const DiffPoly& b);
    DiffPoly scaled(const Rational& s) const;

    DiffPoly d_dr() const;

    /// Formal antiderivative; throws structural_error when the input is not
    /// an exact total derivative.
    DiffPoly integrate() const;

    /// Substitutes u -> 1 + u (expanding powers of the undifferentiated u).
    DiffPoly shift_by_one() const;

    /// Drops the pure-constant monomial.
    DiffPoly without_constant() const;

    /// Rescales so the highest-derivative linear monomial has coefficient 1.
    DiffPoly normalized() const;

    /// Numeric evaluation given u^(j) values.
    double eval(const std::vector<double>& derivs) const;

    std::string str() const;

    void add_term(Mono m, const Rational& c);

  private:
    std::map<Mono, Rational> terms_;
};

/// KdV residues by the Gelfand-Dickey recursion
///   d/dr K_{m+1} = 1/4 K_m''' - u K_m' - 1/2 u' K_m,  K_0 = 1,
/// with vanishing integration constants.
DiffPoly kdv_residue(int m);

/// The stationary flow equation K_{m+1}[1 + F] - K_{m+1}[1] = 0 as a
/// differential polynomial in F, normalized on its top derivative.
DiffPoly stationary_ode(int m);

/// The printed fourth-order equation of the spin-decorated model:
/// F'''' - 18 F F'' - 18 F'' - 9 F'^2 + 24 F^3 + 72 F^2 + 72 F.
DiffPoly ising_ode();

}  // namespace mapdist
