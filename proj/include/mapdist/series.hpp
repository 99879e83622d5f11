#pragma once

#include <functional>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "mapdist/rational.hpp"

namespace mapdist {

using ExpVec = std::vector<int>;

inline int total_degree(const ExpVec& e) {
    int d = 0;
    for (int k : e) d += k;
    return d;
}

/// Exact multivariate formal power series over Rational, truncated at a fixed
/// total degree.  Zero coefficients are never stored; every stored exponent
/// vector has total degree <= cutoff.  Two series are compatible (addable,
/// multipliable, comparable) when they share the variable list and cutoff.
class TruncatedSeries {
  public:
    TruncatedSeries() : cutoff_(0) {}
    TruncatedSeries(std::vector<std::string> vars, int cutoff);

    static TruncatedSeries constant(std::vector<std::string> vars, int cutoff, const Rational& c);
    static TruncatedSeries variable(std::vector<std::string> vars, int cutoff, size_t index);
    static TruncatedSeries monomial(std::vector<std::string> vars, int cutoff,
                                    const ExpVec& exps, const Rational& c);

    const std::vector<std::string>& variables() const { return vars_; }
    int cutoff() const { return cutoff_; }
    size_t term_count() const { return terms_.size(); }
    const std::map<ExpVec, Rational>& terms() const { return terms_; }

    Rational coeff(const ExpVec& e) const;
    Rational constant_term() const { return coeff(ExpVec(vars_.size(), 0)); }
    void set_coeff(const ExpVec& e, const Rational& c);
    void add_coeff(const ExpVec& e, const Rational& c);

    bool is_zero() const { return terms_.empty(); }
    /// Largest |coefficient| over all stored terms (0 for the zero series).
    Rational max_abs_coeff() const;

    TruncatedSeries& operator+=(const TruncatedSeries& o);
    TruncatedSeries& operator-=(const TruncatedSeries& o);
    friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
    friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
    TruncatedSeries operator-() const;
    TruncatedSeries scaled(const Rational& c) const;
    TruncatedSeries pow(int k) const;

    /// Multiplicative inverse; requires a nonzero constant term.
    TruncatedSeries inverse() const;

    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b);

    /// Coefficient restricted to one total degree, as (exponent, value) pairs.
    std::vector<std::pair<ExpVec, Rational>> degree_slice(int d) const;

    /// Numeric evaluation by nested Horner in each variable.
    double evaluate(std::span<const double> point) const;

    std::string str() const;

  private:
    void check_compatible(const TruncatedSeries& o, const char* op) const;

    std::vector<std::string> vars_;
    int cutoff_;
    std::map<ExpVec, Rational> terms_;
};

/// Unique power-series fixed point of a degree-graded contraction.  The map
/// must determine degree-d output coefficients from input degrees < d only;
/// iterating cutoff+1 times from the seed then provably converges.  A
/// coefficient change at an already-frozen degree raises structural_error.
TruncatedSeries series_solve_fixed_point(
    const std::function<TruncatedSeries(const TruncatedSeries&)>& map,
    const TruncatedSeries& seed, int cutoff);

}  // namespace mapdist
