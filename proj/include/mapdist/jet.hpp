#pragma once

#include <cmath>
#include <complex>
#include <vector>

#include "mapdist/errors.hpp"

namespace mapdist {

/// Truncated Taylor expansion of a function at a point: jet arithmetic
/// reproduces derivatives of composites exactly to the carried order.
/// Internally stores Taylor coefficients a_k = f^(k)/k!; derivative(k)
/// rescales on the way out.
template <class T>
class Jet {
  public:
    Jet() : a_(1, T(0)) {}
    Jet(std::vector<T> taylor) : a_(std::move(taylor)) {
        if (a_.empty()) a_.assign(1, T(0));
    }

    static Jet constant(const T& c, int order) {
        std::vector<T> a(order + 1, T(0));
        a[0] = c;
        return Jet(std::move(a));
    }
    /// The identity function r -> r expanded at r = x0.
    static Jet variable(const T& x0, int order) {
        std::vector<T> a(order + 1, T(0));
        a[0] = x0;
        if (order >= 1) a[1] = T(1);
        return Jet(std::move(a));
    }

    int order() const { return static_cast<int>(a_.size()) - 1; }
    const T& taylor(int k) const { return a_[k]; }
    T value() const { return a_[0]; }
    T derivative(int k) const {
        T f(1);
        for (int j = 2; j <= k; ++j) f *= T(j);
        return a_[k] * f;
    }

    friend Jet operator+(const Jet& x, const Jet& y) {
        Jet r = x;
        for (size_t k = 0; k < r.a_.size(); ++k) r.a_[k] += y.a_[k];
        return r;
    }
    friend Jet operator-(const Jet& x, const Jet& y) {
        Jet r = x;
        for (size_t k = 0; k < r.a_.size(); ++k) r.a_[k] -= y.a_[k];
        return r;
    }
    Jet operator-() const {
        Jet r = *this;
        for (auto& v : r.a_) v = -v;
        return r;
    }
    friend Jet operator*(const Jet& x, const Jet& y) {
        int n = x.order();
        std::vector<T> c(n + 1, T(0));
        for (int i = 0; i <= n; ++i)
            for (int j = 0; i + j <= n; ++j) c[i + j] += x.a_[i] * y.a_[j];
        return Jet(std::move(c));
    }
    friend Jet operator*(const T& s, const Jet& y) {
        Jet r = y;
        for (auto& v : r.a_) v *= s;
        return r;
    }
    friend Jet operator+(const T& s, const Jet& y) {
        Jet r = y;
        r.a_[0] += s;
        return r;
    }
    friend Jet operator/(const Jet& x, const Jet& y) {
        if (y.a_[0] == T(0)) throw domain_error("Jet: division by a jet with zero value");
        int n = x.order();
        std::vector<T> q(n + 1);
        for (int k = 0; k <= n; ++k) {
            T s = x.a_[k];
            for (int j = 0; j < k; ++j) s -= q[j] * y.a_[k - j];
            q[k] = s / y.a_[0];
        }
        return Jet(std::move(q));
    }

    friend Jet exp(const Jet& x) {
        int n = x.order();
        std::vector<T> e(n + 1);
        e[0] = std::exp(x.a_[0]);
        for (int k = 1; k <= n; ++k) {
            T s(0);
            for (int j = 1; j <= k; ++j) s += T(j) * x.a_[j] * e[k - j];
            e[k] = s / T(k);
        }
        return Jet(std::move(e));
    }

    friend Jet log(const Jet& x) {
        if (x.a_[0] == T(0)) throw domain_error("Jet: log of a jet with zero value");
        int n = x.order();
        std::vector<T> l(n + 1);
        l[0] = std::log(x.a_[0]);
        for (int k = 1; k <= n; ++k) {
            T s = T(k) * x.a_[k];
            for (int j = 1; j < k; ++j) s -= T(j) * l[j] * x.a_[k - j];
            l[k] = s / (T(k) * x.a_[0]);
        }
        return Jet(std::move(l));
    }

    // sinh and cosh propagate jointly through s' = a' c, c' = a' s.
    friend Jet sinh(const Jet& x) { return sinh_cosh(x).first; }
    friend Jet cosh(const Jet& x) { return sinh_cosh(x).second; }

    static std::pair<Jet, Jet> sinh_cosh(const Jet& x) {
        int n = x.order();
        std::vector<T> s(n + 1), c(n + 1);
        s[0] = std::sinh(x.a_[0]);
        c[0] = std::cosh(x.a_[0]);
        for (int k = 1; k <= n; ++k) {
            T as(0), ac(0);
            for (int j = 1; j <= k; ++j) {
                as += T(j) * x.a_[j] * c[k - j];
                ac += T(j) * x.a_[j] * s[k - j];
            }
            s[k] = as / T(k);
            c[k] = ac / T(k);
        }
        return {Jet(std::move(s)), Jet(std::move(c))};
    }

    /// Jet of f' from the jet of f (drops one order).
    Jet differentiated() const {
        if (order() == 0) return Jet(std::vector<T>{T(0)});
        std::vector<T> d(a_.size() - 1);
        for (size_t k = 1; k < a_.size(); ++k) d[k - 1] = a_[k] * T(static_cast<int>(k));
        return Jet(std::move(d));
    }

    /// Truncate to a lower order.
    Jet truncated(int order) const {
        if (order >= this->order()) return *this;
        std::vector<T> t(a_.begin(), a_.begin() + order + 1);
        return Jet(std::move(t));
    }

  private:
    std::vector<T> a_;
};

using DJet = Jet<double>;
using CJet = Jet<std::complex<double>>;

}  // namespace mapdist
