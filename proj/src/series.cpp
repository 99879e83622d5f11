#include "mapdist/series.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "mapdist/errors.hpp"

namespace mapdist {

TruncatedSeries::TruncatedSeries(std::vector<std::string> vars, int cutoff)
    : vars_(std::move(vars)), cutoff_(cutoff) {
    if (cutoff < 0) throw usage_error("TruncatedSeries: negative cutoff");
}

TruncatedSeries TruncatedSeries::constant(std::vector<std::string> vars, int cutoff,
                                          const Rational& c) {
    TruncatedSeries s(std::move(vars), cutoff);
    if (!c.is_zero()) s.terms_.emplace(ExpVec(s.vars_.size(), 0), c);
    return s;
}

TruncatedSeries TruncatedSeries::variable(std::vector<std::string> vars, int cutoff, size_t index) {
    TruncatedSeries s(std::move(vars), cutoff);
    if (index >= s.vars_.size()) throw usage_error("TruncatedSeries::variable: index out of range");
    ExpVec e(s.vars_.size(), 0);
    e[index] = 1;
    if (cutoff >= 1) s.terms_.emplace(std::move(e), Rational(1));
    return s;
}

TruncatedSeries TruncatedSeries::monomial(std::vector<std::string> vars, int cutoff,
                                          const ExpVec& exps, const Rational& c) {
    TruncatedSeries s(std::move(vars), cutoff);
    if (exps.size() != s.vars_.size())
        throw usage_error("TruncatedSeries::monomial: exponent arity mismatch");
    if (!c.is_zero() && total_degree(exps) <= cutoff) s.terms_.emplace(exps, c);
    return s;
}

Rational TruncatedSeries::coeff(const ExpVec& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

void TruncatedSeries::set_coeff(const ExpVec& e, const Rational& c) {
    if (e.size() != vars_.size()) throw usage_error("set_coeff: exponent arity mismatch");
    if (total_degree(e) > cutoff_) throw usage_error("set_coeff: degree above cutoff");
    if (c.is_zero())
        terms_.erase(e);
    else
        terms_[e] = c;
}

void TruncatedSeries::add_coeff(const ExpVec& e, const Rational& c) {
    if (c.is_zero()) return;
    if (total_degree(e) > cutoff_) return;
    auto [it, fresh] = terms_.emplace(e, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Rational TruncatedSeries::max_abs_coeff() const {
    Rational m(0);
    for (const auto& [e, c] : terms_) {
        Rational a = c.abs();
        if (a > m) m = a;
    }
    return m;
}

void TruncatedSeries::check_compatible(const TruncatedSeries& o, const char* op) const {
    if (vars_ != o.vars_ || cutoff_ != o.cutoff_)
        throw usage_error(std::string("TruncatedSeries: incompatible operands in ") + op);
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& o) {
    check_compatible(o, "+");
    for (const auto& [e, c] : o.terms_) add_coeff(e, c);
    return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& o) {
    check_compatible(o, "-");
    for (const auto& [e, c] : o.terms_) add_coeff(e, -c);
    return *this;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    a.check_compatible(b, "*");
    TruncatedSeries r(a.vars_, a.cutoff_);
    ExpVec e(a.vars_.size());
    for (const auto& [ea, ca] : a.terms_) {
        int da = total_degree(ea);
        for (const auto& [eb, cb] : b.terms_) {
            if (da + total_degree(eb) > a.cutoff_) continue;
            for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            r.add_coeff(e, ca * cb);
        }
    }
    return r;
}

TruncatedSeries TruncatedSeries::operator-() const {
    TruncatedSeries r(vars_, cutoff_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

TruncatedSeries TruncatedSeries::scaled(const Rational& c) const {
    TruncatedSeries r(vars_, cutoff_);
    if (c.is_zero()) return r;
    for (const auto& [e, v] : terms_) r.terms_.emplace(e, v * c);
    return r;
}

TruncatedSeries TruncatedSeries::pow(int k) const {
    if (k < 0) throw usage_error("TruncatedSeries::pow: negative exponent");
    TruncatedSeries r = constant(vars_, cutoff_, Rational(1));
    TruncatedSeries base = *this;
    while (k > 0) {
        if (k & 1) r = r * base;
        base = base * base;
        k >>= 1;
    }
    return r;
}

TruncatedSeries TruncatedSeries::inverse() const {
    Rational c0 = constant_term();
    if (c0.is_zero()) throw usage_error("TruncatedSeries::inverse: zero constant term");
    // Solve q * this = 1 degree by degree.
    TruncatedSeries q(vars_, cutoff_);
    ExpVec zero(vars_.size(), 0);
    q.set_coeff(zero, Rational(1) / c0);
    for (int d = 1; d <= cutoff_; ++d) {
        // coefficient of degree d in q*this must vanish:
        // c0 * q_d(e) + sum_{0<deg(eb)<=d} q_{e-eb} * this_{eb} = 0
        std::map<ExpVec, Rational> qd;
        for (const auto& [eb, cb] : terms_) {
            int db = total_degree(eb);
            if (db == 0 || db > d) continue;
            for (const auto& [eq, cq] : q.terms_) {
                if (total_degree(eq) != d - db) continue;
                ExpVec e(vars_.size());
                for (size_t i = 0; i < e.size(); ++i) e[i] = eq[i] + eb[i];
                auto [it, fresh] = qd.emplace(e, cq * cb);
                if (!fresh) it->second += cq * cb;
            }
        }
        for (auto& [e, v] : qd) {
            Rational c = -v / c0;
            if (!c.is_zero()) q.set_coeff(e, c);
        }
    }
    return q;
}

bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
    return a.vars_ == b.vars_ && a.cutoff_ == b.cutoff_ && a.terms_ == b.terms_;
}

std::vector<std::pair<ExpVec, Rational>> TruncatedSeries::degree_slice(int d) const {
    std::vector<std::pair<ExpVec, Rational>> out;
    for (const auto& [e, c] : terms_)
        if (total_degree(e) == d) out.emplace_back(e, c);
    return out;
}

namespace {

// Horner evaluation over variable `k`, recursing into the remaining ones.
double horner_eval(const std::map<ExpVec, Rational>& terms, size_t k, size_t nvars,
                   std::span<const double> point) {
    if (terms.empty()) return 0.0;
    if (k == nvars) return terms.begin()->second.to_double();
    // group by exponent of variable k
    std::map<int, std::map<ExpVec, Rational>> groups;
    for (const auto& [e, c] : terms) {
        ExpVec rest = e;
        int ek = rest[k];
        rest[k] = 0;
        groups[ek][rest] = c;
    }
    int top = groups.rbegin()->first;
    double acc = 0.0;
    for (int j = top; j >= 0; --j) {
        acc *= point[k];
        auto it = groups.find(j);
        if (it != groups.end()) acc += horner_eval(it->second, k + 1, nvars, point);
    }
    return acc;
}

}  // namespace

double TruncatedSeries::evaluate(std::span<const double> point) const {
    if (point.size() != vars_.size()) throw usage_error("evaluate: wrong point arity");
    return horner_eval(terms_, 0, vars_.size(), point);
}

std::string TruncatedSeries::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c << ")";
        for (size_t i = 0; i < vars_.size(); ++i) {
            if (e[i] == 0) continue;
            os << "*" << vars_[i];
            if (e[i] != 1) os << "^" << e[i];
        }
    }
    return os.str();
}

TruncatedSeries series_solve_fixed_point(
    const std::function<TruncatedSeries(const TruncatedSeries&)>& map,
    const TruncatedSeries& seed, int cutoff) {
    if (seed.cutoff() != cutoff)
        throw usage_error("series_solve_fixed_point: seed cutoff mismatch");
    TruncatedSeries cur = seed;
    for (int it = 0; it <= cutoff; ++it) {
        TruncatedSeries next = map(cur);
        if (next.variables() != cur.variables() || next.cutoff() != cutoff)
            throw usage_error("series_solve_fixed_point: map changed series shape");
        // Degrees < it are frozen after `it` iterations; they must not move.
        if (it > 0) {
            for (int d = 0; d < it; ++d) {
                auto a = cur.degree_slice(d);
                auto b = next.degree_slice(d);
                if (a != b)
                    throw structural_error(
                        "series_solve_fixed_point: map is not a degree-graded contraction");
            }
        }
        cur = std::move(next);
    }
    return cur;
}

}  // namespace mapdist
