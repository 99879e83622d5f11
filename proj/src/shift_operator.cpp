#include "mapdist/shift_operator.hpp"

#include <algorithm>
#include <sstream>

#include "mapdist/errors.hpp"

namespace mapdist {

ShiftOperator ShiftOperator::sigma_power(int k) {
    NormalTerm t;
    t.shift = k;
    return ShiftOperator({t});
}

ShiftOperator ShiftOperator::diagonal(const std::string& name) {
    NormalTerm t;
    t.factors.push_back({name, 0});
    return ShiftOperator({t});
}

ShiftOperator ShiftOperator::scaled(const Rational& s) const {
    std::vector<NormalTerm> out = terms_;
    for (auto& t : out) t.scalar *= s;
    return ShiftOperator(std::move(out));
}

ShiftOperator ShiftOperator::times_coupling(const std::string& name, int exp) const {
    std::vector<NormalTerm> out = terms_;
    for (auto& t : out) t.mono[name] += exp;
    return ShiftOperator(std::move(out));
}

void ShiftOperator::canonicalize() {
    for (auto& t : terms_) std::sort(t.factors.begin(), t.factors.end());
    auto key_less = [](const NormalTerm& a, const NormalTerm& b) {
        if (a.shift != b.shift) return a.shift < b.shift;
        if (a.factors != b.factors) return a.factors < b.factors;
        return a.mono < b.mono;
    };
    std::sort(terms_.begin(), terms_.end(), key_less);
    std::vector<NormalTerm> merged;
    for (auto& t : terms_) {
        if (!merged.empty() && same_shape(merged.back(), t))
            merged.back().scalar += t.scalar;
        else
            merged.push_back(std::move(t));
    }
    std::erase_if(merged, [](const NormalTerm& t) { return t.scalar.is_zero(); });
    terms_ = std::move(merged);
}

ShiftOperator operator+(const ShiftOperator& a, const ShiftOperator& b) {
    std::vector<NormalTerm> out = a.terms_;
    out.insert(out.end(), b.terms_.begin(), b.terms_.end());
    return ShiftOperator(std::move(out));
}

ShiftOperator operator-(const ShiftOperator& a, const ShiftOperator& b) {
    return a + b.scaled(Rational(-1));
}

ShiftOperator operator*(const ShiftOperator& a, const ShiftOperator& b) {
    // (A B)|n> = A(B|n>): factors of A get displaced by B's shift.
    std::vector<NormalTerm> out;
    out.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& ta : a.terms_)
        for (const auto& tb : b.terms_) {
            NormalTerm t;
            t.shift = ta.shift + tb.shift;
            t.factors = tb.factors;
            for (const auto& f : ta.factors) t.factors.push_back({f.name, f.offset + tb.shift});
            t.mono = tb.mono;
            for (const auto& [name, e] : ta.mono) t.mono[name] += e;
            t.scalar = ta.scalar * tb.scalar;
            out.push_back(std::move(t));
        }
    return ShiftOperator(std::move(out));
}

ShiftOperator ShiftOperator::pow(int k) const {
    if (k < 0) throw usage_error("ShiftOperator::pow: negative exponent");
    ShiftOperator r = identity();
    ShiftOperator base = *this;
    while (k > 0) {
        if (k & 1) r = r * base;
        base = base * base;
        k >>= 1;
    }
    return r;
}

SequencePoly matrix_element(const ShiftOperator& op, int row_offset) {
    SequencePoly p;
    for (const auto& t : op.terms()) {
        if (t.shift != row_offset) continue;
        p.terms.push_back({t.scalar, t.mono, t.factors});
    }
    return p;
}

SequenceEquation make_equation(const Rational& lhs, const ShiftOperator& expr, int row_offset) {
    SequenceEquation eq;
    eq.lhs = lhs;
    eq.rhs = matrix_element(expr, row_offset);
    eq.row_offset = row_offset;
    const SeqTerm* head = nullptr;
    for (const auto& t : eq.rhs.terms) {
        if (!t.mono.empty() || t.factors.size() != 1) continue;
        if (head != nullptr)
            throw structural_error("make_equation: ambiguous head term in row " +
                                   std::to_string(row_offset));
        head = &t;
    }
    if (head == nullptr)
        throw structural_error("make_equation: no head term in row " + std::to_string(row_offset));
    if (head->scalar != Rational(1))
        throw structural_error("make_equation: head term has non-unit coefficient");
    eq.head_name = head->factors[0].name;
    eq.head_offset = head->factors[0].offset;
    return eq;
}

namespace {

std::string index_text(int off) {
    if (off == 0) return "n";
    if (off > 0) return "n+" + std::to_string(off);
    return "n" + std::to_string(off);
}

void append_term(std::ostream& os, const SeqTerm& t, bool leading) {
    Rational s = t.scalar;
    if (s.sign() < 0) {
        os << (leading ? "-" : " - ");
        s = -s;
    } else if (!leading) {
        os << " + ";
    }
    bool wrote = false;
    if (s != Rational(1) || (t.mono.empty() && t.factors.empty())) {
        os << s.str();
        wrote = true;
    }
    for (const auto& [name, e] : t.mono) {
        if (wrote) os << "*";
        os << name;
        if (e != 1) os << "^" << e;
        wrote = true;
    }
    // group equal factors into powers
    for (size_t i = 0; i < t.factors.size();) {
        size_t j = i;
        while (j < t.factors.size() && t.factors[j] == t.factors[i]) ++j;
        if (wrote) os << "*";
        os << t.factors[i].name << "[" << index_text(t.factors[i].offset) << "]";
        if (j - i > 1) os << "^" << (j - i);
        wrote = true;
        i = j;
    }
}

}  // namespace

std::string to_text(const SequencePoly& p) {
    if (p.terms.empty()) return "0";
    // order: coupling-free terms first, then by coupling degree, then shape
    std::vector<SeqTerm> terms = p.terms;
    auto mono_deg = [](const CouplingMono& m) {
        int d = 0;
        for (const auto& [k, v] : m) d += v;
        return d;
    };
    std::stable_sort(terms.begin(), terms.end(), [&](const SeqTerm& a, const SeqTerm& b) {
        int da = mono_deg(a.mono), db = mono_deg(b.mono);
        if (da != db) return da < db;
        if (a.mono != b.mono) return a.mono < b.mono;
        return a.factors < b.factors;
    });
    std::ostringstream os;
    bool leading = true;
    for (const auto& t : terms) {
        append_term(os, t, leading);
        leading = false;
    }
    return os.str();
}

std::string to_text(const SequenceEquation& eq) {
    return eq.lhs.str() + " = " + to_text(eq.rhs);
}

double eval_at(const SequencePoly& p, int n,
               const std::function<double(const std::string&)>& coupling,
               const std::function<double(const std::string&, int)>& seq) {
    double acc = 0.0;
    for (const auto& t : p.terms) {
        double v = t.scalar.to_double();
        for (const auto& [name, e] : t.mono)
            for (int k = 0; k < e; ++k) v *= coupling(name);
        for (const auto& f : t.factors) v *= seq(f.name, n + f.offset);
        acc += v;
    }
    return acc;
}

Rational eval_at_exact(const SequencePoly& p, int n,
                       const std::function<Rational(const std::string&)>& coupling,
                       const std::function<Rational(const std::string&, int)>& seq) {
    Rational acc(0);
    for (const auto& t : p.terms) {
        Rational v = t.scalar;
        for (const auto& [name, e] : t.mono)
            for (int k = 0; k < e; ++k) v *= coupling(name);
        for (const auto& f : t.factors) v *= seq(f.name, n + f.offset);
        acc += v;
    }
    return acc;
}

}  // namespace mapdist
