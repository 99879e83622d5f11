#pragma once

#include <array>
#include <vector>

#include "mapdist/polynomial.hpp"

namespace mapdist {

/// Soliton-sum solution of a distance recursion: u_n is a 2^m-term sum over
/// subsets of unit-disk roots with pair factors, and R_n is a ratio of four
/// shifted u's around the limit value R.
struct TauSolution {
    enum class Pairing { EvenValence, Bipartite };
    Pairing pairing = Pairing::EvenValence;
    std::vector<Complex> x;        // unit-disk roots, pairwise distinct
    std::vector<Complex> lambda;   // integration constants
    std::vector<Complex> pv, qv;   // bipartite pairing values p(x_i), q(x_i)
    int exp_offset = 0;            // u_n sums lambda_i x_i^(n + exp_offset)
    std::array<int, 4> ratio{0, 3, 1, 2};  // R_n = R u_{n+a} u_{n+b} / (u_{n+c} u_{n+d})
    double limit = 1.0;            // R

    Complex pair_factor(int i, int j) const;
};

/// Builds the even-valence solution: c_ab = ((x_a-x_b)/(1-x_a x_b))^2,
/// u_n carries x^(n+m), lambdas from the vanishing of u_{-1}..u_{-m}.
TauSolution make_even_valence_tau(const std::vector<Complex>& roots, double R);

/// Bipartite / constellation solution: p(x) = x(1+...+x^(p-2)), q = p(1/x),
/// c_ij = (p_i-p_j)(q_i-q_j)/((p_i-q_j)(q_i-p_j)), ratio offsets (0, p+1, 1, p).
TauSolution make_bipartite_tau(const std::vector<Complex>& roots, double R, int p);

/// The 2^m-term soliton sum.
Complex tau_u(const TauSolution& sol, long n);

/// Closed-form R_n; throws on a vanishing denominator.
double closed_R_n(const TauSolution& sol, long n);

/// max |u_{-k}| over k = 1..m (the boundary conditions the lambdas enforce).
double lambda_fixing_residual(const TauSolution& sol);

/// Newton polish of the lambdas on the conditions u_{-1..-m} = 0.
void polish_lambdas(TauSolution& sol, int iters = 20);

/// Trivalent closed forms: R_n = R (1-x^{n+1})(1-x^{n+3})/(1-x^{n+2})^2 and
/// S_n = S - g R^2 (1-x)(1-x^2) x^n / ((1-x^{n+1})(1-x^{n+2})).
struct TrivalentClosedForm {
    double g, R, S;
    Complex x;
    double r_n(long n) const;
    double s_n(long n) const;
};

/// Chebyshev-determinant form of the two-root even-valence solution:
/// R_n = R D_n D_{n+3} / (D_{n+1} D_{n+2}), D_n = det[U_{n+2j-2}(w_i)].
double chebyshev_det_R_n(const std::vector<Complex>& roots, double R, long n);

}  // namespace mapdist
