#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "mapdist/rational.hpp"

namespace mapdist {

/// One diagonal-symbol occurrence: Name acting at index n + offset.
struct SymbolFactor {
    std::string name;
    int offset = 0;
    auto operator<=>(const SymbolFactor&) const = default;
};

/// Monomial in the coupling constants, name -> positive exponent.
using CouplingMono = std::map<std::string, int>;

/// One normal-ordered summand.  Acting on |n> it yields
///   scalar * mono * prod_f f.name(n + f.offset) * |n + shift>.
struct NormalTerm {
    int shift = 0;
    std::vector<SymbolFactor> factors;  // kept sorted
    CouplingMono mono;
    Rational scalar = Rational(1);

    friend bool same_shape(const NormalTerm& a, const NormalTerm& b) {
        return a.shift == b.shift && a.factors == b.factors && a.mono == b.mono;
    }
    friend bool operator==(const NormalTerm& a, const NormalTerm& b) {
        return same_shape(a, b) && a.scalar == b.scalar;
    }
};

/// Formal operator: finite sum of normal-ordered terms in the shift sigma
/// (sigma|n> = |n+1>) and diagonal symbols.  Terms with equal shape are
/// merged; zero terms are dropped.  Values are immutable once built.
class ShiftOperator {
  public:
    ShiftOperator() = default;

    static ShiftOperator zero() { return {}; }
    static ShiftOperator identity() { return sigma_power(0); }
    static ShiftOperator sigma_power(int k);
    /// Diagonal symbol acting at offset 0.
    static ShiftOperator diagonal(const std::string& name);

    ShiftOperator scaled(const Rational& s) const;
    ShiftOperator times_coupling(const std::string& name, int exp = 1) const;

    friend ShiftOperator operator+(const ShiftOperator& a, const ShiftOperator& b);
    friend ShiftOperator operator-(const ShiftOperator& a, const ShiftOperator& b);
    /// Operator product; the right factor acts first.
    friend ShiftOperator operator*(const ShiftOperator& a, const ShiftOperator& b);
    ShiftOperator pow(int k) const;

    const std::vector<NormalTerm>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    friend bool operator==(const ShiftOperator& a, const ShiftOperator& b) {
        return a.terms_ == b.terms_;
    }

  private:
    explicit ShiftOperator(std::vector<NormalTerm> t) : terms_(std::move(t)) { canonicalize(); }
    void canonicalize();
    std::vector<NormalTerm> terms_;
};

/// A term of a matrix element: scalar * mono * prod Name_{n+offset}.
struct SeqTerm {
    Rational scalar;
    CouplingMono mono;
    std::vector<SymbolFactor> factors;
};

struct SequencePoly {
    std::vector<SeqTerm> terms;  // canonical order, merged
};

/// <n + row_offset| op |n>, purely syntactic.
SequencePoly matrix_element(const ShiftOperator& op, int row_offset);

/// One generated equation: lhs = rhs, valid wherever the head index
/// n + head_offset is a legal (nonnegative) sequence index.  The head is the
/// unique coupling-free single-symbol term, i.e. the entry the equation
/// determines.
struct SequenceEquation {
    Rational lhs;
    SequencePoly rhs;
    int row_offset = 0;
    std::string head_name;
    int head_offset = 0;
};

/// Builds the equation and locates its head term; throws structural_error if
/// the head is not unique.
SequenceEquation make_equation(const Rational& lhs, const ShiftOperator& expr, int row_offset);

/// Stable human-readable form, e.g.
///   1 = R[n] - g*R[n]*R[n-1] - g*R[n]^2 - g*R[n]*R[n+1]
std::string to_text(const SequenceEquation& eq);
std::string to_text(const SequencePoly& p);

/// Numeric evaluation with coupling values and sequence values supplied by
/// callbacks; used by residual checks.
double eval_at(const SequencePoly& p, int n,
               const std::function<double(const std::string&)>& coupling,
               const std::function<double(const std::string&, int)>& seq);

Rational eval_at_exact(const SequencePoly& p, int n,
                       const std::function<Rational(const std::string&)>& coupling,
                       const std::function<Rational(const std::string&, int)>& seq);

}  // namespace mapdist
