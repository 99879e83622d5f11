#pragma once

#include <complex>
#include <vector>

#include "mapdist/rational.hpp"

namespace mapdist {

using Complex = std::complex<double>;

/// Dense univariate polynomial, coefficients in ascending degree.  The leading
/// coefficient is nonzero unless the polynomial is zero.
template <class T>
class Polynomial {
  public:
    Polynomial() = default;
    explicit Polynomial(std::vector<T> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Polynomial zero() { return Polynomial(); }
    static Polynomial constant(T v) { return Polynomial(std::vector<T>{v}); }
    static Polynomial x() { return Polynomial(std::vector<T>{T(0), T(1)}); }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<T>& coeffs() const { return c_; }
    T coeff(int k) const { return k >= 0 && k < static_cast<int>(c_.size()) ? c_[k] : T(0); }

    template <class X>
    X eval(const X& x) const {
        X acc(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + X(*it);
        return acc;
    }

    Polynomial derivative() const {
        if (c_.size() <= 1) return Polynomial();
        std::vector<T> d(c_.size() - 1);
        for (size_t k = 1; k < c_.size(); ++k) d[k - 1] = c_[k] * T(static_cast<int>(k));
        return Polynomial(std::move(d));
    }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        std::vector<T> r(std::max(a.c_.size(), b.c_.size()), T(0));
        for (size_t i = 0; i < a.c_.size(); ++i) r[i] = r[i] + a.c_[i];
        for (size_t i = 0; i < b.c_.size(); ++i) r[i] = r[i] + b.c_[i];
        return Polynomial(std::move(r));
    }
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
        std::vector<T> r(std::max(a.c_.size(), b.c_.size()), T(0));
        for (size_t i = 0; i < a.c_.size(); ++i) r[i] = r[i] + a.c_[i];
        for (size_t i = 0; i < b.c_.size(); ++i) r[i] = r[i] - b.c_[i];
        return Polynomial(std::move(r));
    }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return Polynomial();
        std::vector<T> r(a.c_.size() + b.c_.size() - 1, T(0));
        for (size_t i = 0; i < a.c_.size(); ++i)
            for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] = r[i + j] + a.c_[i] * b.c_[j];
        return Polynomial(std::move(r));
    }
    Polynomial scaled(const T& s) const {
        std::vector<T> r = c_;
        for (auto& v : r) v = v * s;
        return Polynomial(std::move(r));
    }

  private:
    void trim() {
        while (!c_.empty() && c_.back() == T(0)) c_.pop_back();
    }
    std::vector<T> c_;
};

using RPoly = Polynomial<Rational>;
using DPoly = Polynomial<double>;
using CPoly = Polynomial<Complex>;

CPoly to_cpoly(const DPoly& p);
CPoly to_cpoly(const RPoly& p);
DPoly to_dpoly(const RPoly& p);

/// All complex roots, with multiple roots repeated.  Aberth-Ehrlich
/// simultaneous iteration, falling back to companion-matrix eigenvalues if the
/// iteration stalls; roots within clustering distance are averaged.  Each
/// returned root satisfies |p(root)| < tol * (coefficient scale).
std::vector<Complex> poly_roots(const CPoly& p, double tol = 1e-12);

/// Roots of modulus < 1, sorted by descending modulus (ties by ascending
/// argument).  A root within `circle_tol` of the unit circle raises
/// domain_error, signalling a critical point.
std::vector<Complex> roots_in_unit_disk(const CPoly& p, double tol = 1e-12,
                                        double circle_tol = 1e-8);

/// True when coefficients read the same in both directions (x -> 1/x symmetry).
bool is_palindromic(const CPoly& p, double tol = 1e-10);

/// Given s_k, k=0..m, representing the symmetric Laurent expression
/// sum_k s_k (x^k + x^{-k}) with the k=0 term counted once, returns the
/// equivalent polynomial in w = x + 1/x (uses x^k + x^{-k} = z_k(w),
/// z_0 = 2, z_1 = w, z_{k+1} = w z_k - z_{k-1}).
template <class T>
Polynomial<T> symmetric_laurent_to_w(const std::vector<T>& s) {
    Polynomial<T> zprev = Polynomial<T>::constant(T(2));
    Polynomial<T> zcur = Polynomial<T>::x();
    Polynomial<T> acc = zprev.scaled(s.empty() ? T(0) : s[0]).scaled(T(1) / T(2));
    // k=0 term contributes s_0 (half of z_0 * s_0)
    for (size_t k = 1; k < s.size(); ++k) {
        acc = acc + zcur.scaled(s[k]);
        Polynomial<T> znext = Polynomial<T>::x() * zcur - zprev;
        zprev = zcur;
        zcur = znext;
    }
    return acc;
}

/// Expands a polynomial in w = x + 1/x into the reciprocal polynomial
/// x^deg * q(x + 1/x).
CPoly w_poly_to_x(const CPoly& q);

/// Chebyshev polynomial of the second kind by the three-term recurrence
/// U_{-1} = 0, U_0 = 1, U_{n+1} = w U_n - U_{n-1}.
template <class X>
X chebyshev_u(int n, const X& w) {
    if (n <= -2) throw std::invalid_argument("chebyshev_u: n must be >= -1");
    if (n == -1) return X(0);
    X prev(0), cur(1);
    for (int k = 0; k < n; ++k) {
        X next = w * cur - prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

/// U_n as an exact integer-coefficient polynomial in w.
RPoly chebyshev_u_poly(int n);

}  // namespace mapdist
