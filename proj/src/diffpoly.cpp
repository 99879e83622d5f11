#include "mapdist/diffpoly.hpp"

#include <algorithm>
#include <sstream>

#include "mapdist/errors.hpp"

namespace mapdist {

namespace {

void trim(DiffPoly::Mono& m) {
    while (!m.empty() && m.back() == 0) m.pop_back();
}

}  // namespace

void DiffPoly::add_term(Mono m, const Rational& c) {
    if (c.is_zero()) return;
    trim(m);
    auto [it, fresh] = terms_.emplace(std::move(m), c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

DiffPoly DiffPoly::constant(const Rational& c) {
    DiffPoly p;
    p.add_term({}, c);
    return p;
}

DiffPoly DiffPoly::u_derivative(int order, int power) {
    DiffPoly p;
    Mono m(order + 1, 0);
    m[order] = power;
    p.add_term(std::move(m), Rational(1));
    return p;
}

Rational DiffPoly::coeff(const Mono& m) const {
    Mono key = m;
    trim(key);
    auto it = terms_.find(key);
    return it == terms_.end() ? Rational(0) : it->second;
}

int DiffPoly::max_order() const {
    int k = -1;
    for (const auto& [m, c] : terms_) k = std::max(k, static_cast<int>(m.size()) - 1);
    return k;
}

DiffPoly operator+(const DiffPoly& a, const DiffPoly& b) {
    DiffPoly r = a;
    for (const auto& [m, c] : b.terms_) r.add_term(m, c);
    return r;
}

DiffPoly operator-(const DiffPoly& a, const DiffPoly& b) {
    DiffPoly r = a;
    for (const auto& [m, c] : b.terms_) r.add_term(m, -c);
    return r;
}

DiffPoly operator*(const DiffPoly& a, const DiffPoly& b) {
    DiffPoly r;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) {
            DiffPoly::Mono m(std::max(ma.size(), mb.size()), 0);
            for (size_t i = 0; i < ma.size(); ++i) m[i] += ma[i];
            for (size_t i = 0; i < mb.size(); ++i) m[i] += mb[i];
            r.add_term(std::move(m), ca * cb);
        }
    return r;
}

DiffPoly DiffPoly::scaled(const Rational& s) const {
    DiffPoly r;
    for (const auto& [m, c] : terms_) r.add_term(m, c * s);
    return r;
}

DiffPoly DiffPoly::d_dr() const {
    DiffPoly r;
    for (const auto& [m, c] : terms_)
        for (size_t j = 0; j < m.size(); ++j) {
            if (m[j] == 0) continue;
            Mono d = m;
            d[j] -= 1;
            if (d.size() < j + 2) d.resize(j + 2, 0);
            d[j + 1] += 1;
            r.add_term(std::move(d), c * Rational(m[j]));
        }
    return r;
}

DiffPoly DiffPoly::integrate() const {
    DiffPoly rest = *this;
    DiffPoly anti;
    while (!rest.is_zero()) {
        int top = rest.max_order();
        if (top <= 0)
            throw structural_error("DiffPoly::integrate: remainder is not a total derivative");
        // all top-order terms must be linear in u^(top); integrate them with
        // respect to u^(top-1)
        DiffPoly piece;
        for (const auto& [m, c] : rest.terms_) {
            if (static_cast<int>(m.size()) - 1 != top) continue;
            if (m[top] != 1)
                throw structural_error("DiffPoly::integrate: nonlinear top derivative");
            Mono w = m;
            w[top] = 0;
            trim(w);
            // c * u^(top) * prod -> antiderivative c/(j+1) * u^(top-1)^{j+1} * rest
            int j = (static_cast<int>(w.size()) - 1 >= top - 1) ? w[top - 1] : 0;
            Mono a = w;
            if (static_cast<int>(a.size()) < top) a.resize(top, 0);
            a[top - 1] = j + 1;
            piece.add_term(std::move(a), c / Rational(j + 1));
        }
        anti = anti + piece;
        rest = rest - piece.d_dr();
    }
    return anti;
}

DiffPoly DiffPoly::shift_by_one() const {
    DiffPoly r;
    for (const auto& [m, c] : terms_) {
        int e0 = m.empty() ? 0 : m[0];
        Mono base = m;
        if (!base.empty()) base[0] = 0;
        for (int k = 0; k <= e0; ++k) {
            Mono t = base;
            if (t.empty() && k > 0) t.resize(1, 0);
            if (!t.empty()) t[0] = k;
            r.add_term(std::move(t), c * Rational::binomial(e0, k));
        }
    }
    return r;
}

DiffPoly DiffPoly::without_constant() const {
    DiffPoly r = *this;
    r.terms_.erase(Mono{});
    return r;
}

DiffPoly DiffPoly::normalized() const {
    int top = max_order();
    Mono lead(top + 1, 0);
    lead[top] = 1;
    Rational c = coeff(lead);
    if (c.is_zero()) throw structural_error("DiffPoly::normalized: no linear top derivative");
    return scaled(Rational(1) / c);
}

double DiffPoly::eval(const std::vector<double>& derivs) const {
    double acc = 0.0;
    for (const auto& [m, c] : terms_) {
        double v = c.to_double();
        for (size_t j = 0; j < m.size(); ++j)
            for (int k = 0; k < m[j]; ++k) v *= derivs.at(j);
        acc += v;
    }
    return acc;
}

std::string DiffPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c << ")";
        for (size_t j = 0; j < m.size(); ++j) {
            if (m[j] == 0) continue;
            os << "*u";
            for (size_t k = 0; k < j; ++k) os << "'";
            if (m[j] != 1) os << "^" << m[j];
        }
    }
    return os.str();
}

DiffPoly kdv_residue(int m) {
    if (m < 0 || m > 6) throw usage_error("kdv_residue: m out of the supported range");
    DiffPoly k = DiffPoly::constant(Rational(1));
    DiffPoly u = DiffPoly::u_derivative(0);
    DiffPoly up = DiffPoly::u_derivative(1);
    for (int i = 0; i < m; ++i) {
        DiffPoly rhs = k.d_dr().d_dr().d_dr().scaled(Rational(1, 4)) - u * k.d_dr() -
                       up.scaled(Rational(1, 2)) * k;
        k = rhs.integrate();
    }
    return k;
}

DiffPoly stationary_ode(int m) {
    DiffPoly k = kdv_residue(m + 1);
    DiffPoly shifted = k.shift_by_one();
    DiffPoly diff = (shifted - DiffPoly::constant(shifted.coeff({}))).without_constant();
    return diff.normalized();
}

DiffPoly ising_ode() {
    using D = DiffPoly;
    return D::u_derivative(4) - (D::u_derivative(0) * D::u_derivative(2)).scaled(Rational(18)) -
           D::u_derivative(2).scaled(Rational(18)) -
           D::u_derivative(1, 2).scaled(Rational(9)) +
           D::u_derivative(0, 3).scaled(Rational(24)) +
           D::u_derivative(0, 2).scaled(Rational(72)) +
           D::u_derivative(0).scaled(Rational(72));
}

}  // namespace mapdist
