#pragma once

#include <map>
#include <string>
#include <vector>

#include "mapdist/model.hpp"
#include "mapdist/series.hpp"
#include "mapdist/shift_operator.hpp"

namespace mapdist {

/// Maps each operator coupling name into the series world: a numeric scale
/// times a monomial in the solver variables.  The identity binding keeps
/// every coupling as its own formal variable; a weighted binding can collapse
/// couplings onto a single bookkeeping variable (g4 -> a*t) or substitute a
/// numeric value entirely (the Ising chain weight c).
struct CouplingBinding {
    struct Entry {
        Rational scale{1};
        ExpVec exps;  // over `variables`
    };
    std::vector<std::string> variables;
    std::map<std::string, Entry> bind;

    static CouplingBinding formal(const std::vector<std::string>& coupling_names);
    /// All couplings map to scale_i * t (single variable), numeric scales.
    static CouplingBinding weighted_t(const std::vector<std::pair<std::string, Rational>>& scales);
    /// Like formal() but the given couplings become pure numbers.
    static CouplingBinding formal_with_numeric(
        const std::vector<std::string>& formal_names,
        const std::vector<std::pair<std::string, Rational>>& numeric);

    /// Total formal degree of a coupling monomial under this binding.
    int formal_degree(const CouplingMono& mono) const;
    /// (scale, exponent vector) of a coupling monomial.
    Entry resolve(const CouplingMono& mono) const;
};

/// Solved sequence entries, indices 0..n_max, exact at every degree <= cutoff.
struct SequenceFamily {
    std::vector<std::string> names;
    std::vector<std::string> variables;
    int cutoff = 0;
    int n_max = 0;
    std::map<std::string, std::vector<TruncatedSeries>> entries;

    const TruncatedSeries& at(const std::string& name, int n) const;
    /// Boundary semantics: negative indices give the zero series, indices
    /// above n_max give the stabilized top entry.
    TruncatedSeries value(const std::string& name, int n) const;
};

/// Largest positive factor offset appearing in the system; the window must
/// extend cutoff * this much past the largest index of interest for all
/// solved entries to be exact.
int max_positive_offset(const std::vector<SequenceEquation>& eqs);

int default_n_max(const std::vector<SequenceEquation>& eqs, int cutoff);

/// Order-by-order exact solution of a distance-indexed system with zero
/// boundary values at negative indices and stabilized closure above n_max.
SequenceFamily solve_system(const std::vector<SequenceEquation>& eqs, int cutoff, int n_max,
                            const CouplingBinding& binding);

SequenceFamily solve_sequences(const ModelSpec& model, int cutoff, int n_max = -1);
SequenceFamily solve_sequences(const ModelSpec& model, int cutoff, int n_max,
                               const CouplingBinding& binding);

/// Entries at n_max (the stabilized large-distance limit).
std::map<std::string, TruncatedSeries> stabilized_limit(const SequenceFamily& fam);

/// The distance-free algebraic system (all index offsets collapsed), solved
/// to the same cutoff.  The stabilized limit must coincide with this.
std::map<std::string, TruncatedSeries> distance_free_solution(const ModelSpec& model, int cutoff,
                                                              const CouplingBinding& binding);
std::map<std::string, TruncatedSeries> distance_free_solution(
    const std::vector<SequenceEquation>& eqs, int cutoff, const CouplingBinding& binding);

/// Exact max-norm residual of the system over all fully-in-window instances;
/// zero for a correctly solved family.
Rational residual(const SequenceFamily& fam, const std::vector<SequenceEquation>& eqs,
                  const CouplingBinding& binding);

/// Largest degree N <= cutoff at which some entry with index >= N * stride
/// still differs from the top entry (-1 when stabilization holds everywhere).
int stabilization_violation(const SequenceFamily& fam, int stride);

/// f(R_n, R_{n+1}) with f(x,y) = xy(1 - gx - gy) - x - y for the tetravalent
/// family; constant in n along solutions.
std::vector<TruncatedSeries> integral_of_motion(const SequenceFamily& fam,
                                                const CouplingBinding& binding);

}  // namespace mapdist
