#include "mapdist/sequence_solver.hpp"

#include <algorithm>
#include <memory>

#include "mapdist/errors.hpp"

namespace mapdist {

CouplingBinding CouplingBinding::formal(const std::vector<std::string>& coupling_names) {
    CouplingBinding b;
    b.variables = coupling_names;
    for (size_t i = 0; i < coupling_names.size(); ++i) {
        Entry e;
        e.exps.assign(coupling_names.size(), 0);
        e.exps[i] = 1;
        b.bind[coupling_names[i]] = std::move(e);
    }
    return b;
}

CouplingBinding CouplingBinding::weighted_t(
    const std::vector<std::pair<std::string, Rational>>& scales) {
    CouplingBinding b;
    b.variables = {"t"};
    for (const auto& [name, scale] : scales) {
        Entry e;
        e.scale = scale;
        e.exps = {1};
        b.bind[name] = std::move(e);
    }
    return b;
}

CouplingBinding CouplingBinding::formal_with_numeric(
    const std::vector<std::string>& formal_names,
    const std::vector<std::pair<std::string, Rational>>& numeric) {
    CouplingBinding b = formal(formal_names);
    for (const auto& [name, value] : numeric) {
        Entry e;
        e.scale = value;
        e.exps.assign(formal_names.size(), 0);
        b.bind[name] = std::move(e);
    }
    return b;
}

int CouplingBinding::formal_degree(const CouplingMono& mono) const {
    int d = 0;
    for (const auto& [name, e] : mono) {
        auto it = bind.find(name);
        if (it == bind.end()) throw usage_error("CouplingBinding: unbound coupling " + name);
        d += e * total_degree(it->second.exps);
    }
    return d;
}

CouplingBinding::Entry CouplingBinding::resolve(const CouplingMono& mono) const {
    Entry out;
    out.exps.assign(variables.size(), 0);
    for (const auto& [name, e] : mono) {
        auto it = bind.find(name);
        if (it == bind.end()) throw usage_error("CouplingBinding: unbound coupling " + name);
        for (int k = 0; k < e; ++k) out.scale *= it->second.scale;
        for (size_t i = 0; i < out.exps.size(); ++i) out.exps[i] += e * it->second.exps[i];
    }
    return out;
}

const TruncatedSeries& SequenceFamily::at(const std::string& name, int n) const {
    auto it = entries.find(name);
    if (it == entries.end()) throw usage_error("SequenceFamily: unknown sequence " + name);
    if (n < 0 || n > n_max) throw usage_error("SequenceFamily::at: index out of window");
    return it->second[n];
}

TruncatedSeries SequenceFamily::value(const std::string& name, int n) const {
    if (n < 0) return TruncatedSeries(variables, cutoff);
    return at(name, std::min(n, n_max));
}

int max_positive_offset(const std::vector<SequenceEquation>& eqs) {
    int m = 0;
    for (const auto& eq : eqs)
        for (const auto& t : eq.rhs.terms)
            for (const auto& f : t.factors) m = std::max(m, f.offset - eq.head_offset);
    return m;
}

int default_n_max(const std::vector<SequenceEquation>& eqs, int cutoff) {
    return cutoff * std::max(1, max_positive_offset(eqs)) + 4;
}

namespace {

using Stratum = std::map<ExpVec, Rational>;
using Strata = std::vector<Stratum>;  // indexed by total degree

void enumerate_monomials_rec(int nvars, int pos, int left, ExpVec& cur,
                             std::vector<ExpVec>& out) {
    if (pos == nvars - 1) {
        cur[pos] = left;
        out.push_back(cur);
        return;
    }
    for (int k = left; k >= 0; --k) {
        cur[pos] = k;
        enumerate_monomials_rec(nvars, pos + 1, left - k, cur, out);
    }
}

std::vector<ExpVec> enumerate_monomials(int nvars, int d) {
    std::vector<ExpVec> out;
    if (nvars == 0) {
        if (d == 0) out.push_back({});
        return out;
    }
    ExpVec cur(nvars, 0);
    enumerate_monomials_rec(nvars, 0, d, cur, out);
    return out;
}

Stratum conv_stratum(const Strata& a, const Strata& b, int d) {
    Stratum out;
    for (int i = 0; i <= d; ++i) {
        if (a[i].empty() || b[d - i].empty()) continue;
        for (const auto& [ea, ca] : a[i])
            for (const auto& [eb, cb] : b[d - i]) {
                ExpVec e(ea.size());
                for (size_t k = 0; k < e.size(); ++k) e[k] = ea[k] + eb[k];
                Rational v = ca * cb;
                auto [it, fresh] = out.emplace(std::move(e), v);
                if (!fresh) {
                    it->second += v;
                    if (it->second.is_zero()) out.erase(it);
                }
            }
    }
    return out;
}

struct CompiledTerm {
    Rational coef;  // scalar * coupling scale
    ExpVec cexps;
    int cdeg = 0;
    std::vector<std::pair<int, int>> factors;  // (sequence, offset)
};

struct CompiledEq {
    Rational lhs;
    int head_seq = 0;
    int head_off = 0;
    std::vector<CompiledTerm> terms;
};

struct TermCache {
    bool dead = false;
    std::vector<const Strata*> fs;
    // prefix products of fs[0..j+1]; only kept for >= 3 factors (a 2-factor
    // product is convolved on the fly at the same cost)
    std::vector<Strata> prefixes;
};

// exact dense LU with first-nonzero pivoting
class DenseLU {
  public:
    explicit DenseLU(std::vector<std::vector<Rational>> a) : a_(std::move(a)) {
        n_ = static_cast<int>(a_.size());
        perm_.resize(n_);
        for (int i = 0; i < n_; ++i) perm_[i] = i;
        for (int k = 0; k < n_; ++k) {
            int piv = -1;
            for (int i = k; i < n_; ++i)
                if (!a_[i][k].is_zero()) {
                    piv = i;
                    break;
                }
            if (piv < 0) throw structural_error("sequence solver: singular fixed-degree system");
            std::swap(a_[k], a_[piv]);
            std::swap(perm_[k], perm_[piv]);
            for (int i = k + 1; i < n_; ++i) {
                if (a_[i][k].is_zero()) continue;
                Rational m = a_[i][k] / a_[k][k];
                a_[i][k] = m;
                for (int j = k + 1; j < n_; ++j)
                    if (!a_[k][j].is_zero()) a_[i][j] -= m * a_[k][j];
            }
        }
    }

    std::vector<Rational> solve(const std::vector<Rational>& b) const {
        std::vector<Rational> y(n_);
        for (int i = 0; i < n_; ++i) {
            Rational s = b[perm_[i]];
            for (int j = 0; j < i; ++j)
                if (!a_[i][j].is_zero() && !y[j].is_zero()) s -= a_[i][j] * y[j];
            y[i] = std::move(s);
        }
        for (int i = n_ - 1; i >= 0; --i) {
            Rational s = std::move(y[i]);
            for (int j = i + 1; j < n_; ++j)
                if (!a_[i][j].is_zero() && !y[j].is_zero()) s -= a_[i][j] * y[j];
            y[i] = s / a_[i][i];
        }
        return y;
    }

  private:
    std::vector<std::vector<Rational>> a_;
    std::vector<int> perm_;
    int n_;
};

}  // namespace

SequenceFamily solve_system(const std::vector<SequenceEquation>& eqs, int cutoff, int n_max,
                            const CouplingBinding& binding) {
    if (cutoff < 0 || n_max < 0) throw usage_error("solve_system: negative cutoff or n_max");
    const int nseq = static_cast<int>(eqs.size());
    std::vector<std::string> names;
    for (const auto& eq : eqs) {
        if (std::find(names.begin(), names.end(), eq.head_name) != names.end())
            throw structural_error("solve_system: duplicate head sequence " + eq.head_name);
        names.push_back(eq.head_name);
    }
    auto seq_index = [&](const std::string& s) {
        auto it = std::find(names.begin(), names.end(), s);
        if (it == names.end())
            throw structural_error("solve_system: equation references unknown sequence " + s);
        return static_cast<int>(it - names.begin());
    };

    std::vector<CompiledEq> ceqs(nseq);
    for (int e = 0; e < nseq; ++e) {
        ceqs[e].lhs = eqs[e].lhs;
        ceqs[e].head_seq = seq_index(eqs[e].head_name);
        ceqs[e].head_off = eqs[e].head_offset;
        for (const auto& t : eqs[e].rhs.terms) {
            CompiledTerm ct;
            auto r = binding.resolve(t.mono);
            ct.coef = t.scalar * r.scale;
            ct.cexps = r.exps;
            ct.cdeg = total_degree(r.exps);
            for (const auto& f : t.factors) ct.factors.emplace_back(seq_index(f.name), f.offset);
            if (ct.cdeg == 0 && ct.factors.size() > 1)
                throw structural_error(
                    "solve_system: non-contractive system (coupling-free product term)");
            ceqs[e].terms.push_back(std::move(ct));
        }
    }

    const int W = n_max + 1;
    const int nvars = static_cast<int>(binding.variables.size());
    auto unk = [&](int s, int idx) { return s * W + idx; };

    std::vector<std::vector<Strata>> strata(nseq);
    for (auto& v : strata) v.assign(W, Strata(cutoff + 1));

    struct Inst {
        int eq;
        int n;
        std::vector<TermCache> caches;
    };
    std::vector<Inst> insts;
    insts.reserve(static_cast<size_t>(nseq) * W);
    for (int e = 0; e < nseq; ++e)
        for (int h = 0; h < W; ++h) insts.push_back({e, h - ceqs[e].head_off, {}});

    for (auto& inst : insts) {
        const auto& ce = ceqs[inst.eq];
        inst.caches.resize(ce.terms.size());
        for (size_t ti = 0; ti < ce.terms.size(); ++ti) {
            const auto& t = ce.terms[ti];
            auto& cache = inst.caches[ti];
            for (const auto& [s, off] : t.factors) {
                int idx = inst.n + off;
                if (idx < 0) {
                    cache.dead = true;  // zero boundary value kills the term
                    break;
                }
                cache.fs.push_back(&strata[s][std::min(idx, n_max)]);
            }
            if (!cache.dead && cache.fs.size() >= 3)
                cache.prefixes.assign(cache.fs.size() - 2, Strata(cutoff + 1));
        }
    }

    // linear part (degree-independent by construction)
    const int N = nseq * W;
    bool identity = true;
    std::vector<std::vector<std::pair<int, Rational>>> rows(N);
    for (int r = 0; r < N; ++r) {
        const auto& inst = insts[r];
        const auto& ce = ceqs[inst.eq];
        std::map<int, Rational> row;
        for (const auto& t : ce.terms) {
            if (t.cdeg != 0 || t.factors.empty()) continue;
            int idx = inst.n + t.factors[0].second;
            if (idx < 0) continue;
            row[unk(t.factors[0].first, std::min(idx, n_max))] += t.coef;
        }
        std::erase_if(row, [](const auto& kv) { return kv.second.is_zero(); });
        int head_u = unk(ce.head_seq, inst.n + ce.head_off);
        if (row.size() != 1 || row.begin()->first != head_u ||
            row.begin()->second != Rational(1))
            identity = false;
        rows[r].assign(row.begin(), row.end());
    }

    std::unique_ptr<DenseLU> lu;
    std::vector<int> row_of_unknown(N, -1);
    if (identity) {
        for (int r = 0; r < N; ++r) row_of_unknown[rows[r][0].first] = r;
    } else {
        std::vector<std::vector<Rational>> dense(N, std::vector<Rational>(N, Rational(0)));
        for (int r = 0; r < N; ++r)
            for (const auto& [c, v] : rows[r]) dense[r][c] = v;
        lu = std::make_unique<DenseLU>(std::move(dense));
    }

    for (int d = 0; d <= cutoff; ++d) {
        std::vector<Stratum> known(N);
        for (int r = 0; r < N; ++r) {
            const auto& inst = insts[r];
            const auto& ce = ceqs[inst.eq];
            for (size_t ti = 0; ti < ce.terms.size(); ++ti) {
                const auto& t = ce.terms[ti];
                const auto& cache = inst.caches[ti];
                if (cache.dead) continue;
                if (t.factors.empty()) {
                    if (t.cdeg == d) {
                        auto [it, fresh] = known[r].emplace(t.cexps, t.coef);
                        if (!fresh) it->second += t.coef;
                    }
                    continue;
                }
                if (t.cdeg == 0) continue;  // linear part
                int tt = d - t.cdeg;
                if (tt < 0) continue;
                Stratum prod;
                if (cache.fs.size() == 1)
                    prod = (*cache.fs[0])[tt];
                else if (cache.fs.size() == 2)
                    prod = conv_stratum(*cache.fs[0], *cache.fs[1], tt);
                else
                    prod = conv_stratum(cache.prefixes.back(), *cache.fs.back(), tt);
                for (const auto& [e, v] : prod) {
                    ExpVec target(e.size());
                    for (size_t k = 0; k < e.size(); ++k) target[k] = e[k] + t.cexps[k];
                    Rational add = v * t.coef;
                    auto [it, fresh] = known[r].emplace(std::move(target), add);
                    if (!fresh) {
                        it->second += add;
                        if (it->second.is_zero()) known[r].erase(it);
                    }
                }
            }
        }

        for (const auto& mu : enumerate_monomials(nvars, d)) {
            std::vector<Rational> b(N, Rational(0));
            bool any = false;
            for (int r = 0; r < N; ++r) {
                Rational v(0);
                if (d == 0) v = ceqs[insts[r].eq].lhs;
                auto it = known[r].find(mu);
                if (it != known[r].end()) v -= it->second;
                if (!v.is_zero()) any = true;
                b[r] = std::move(v);
            }
            if (!any) continue;
            std::vector<Rational> x;
            if (identity) {
                x.resize(N);
                for (int u = 0; u < N; ++u) x[u] = b[row_of_unknown[u]];
            } else {
                x = lu->solve(b);
            }
            for (int s = 0; s < nseq; ++s)
                for (int idx = 0; idx < W; ++idx) {
                    Rational& v = x[unk(s, idx)];
                    if (!v.is_zero()) strata[s][idx][d].emplace(mu, std::move(v));
                }
        }

        for (auto& inst : insts)
            for (auto& cache : inst.caches) {
                if (cache.dead || cache.fs.size() < 3) continue;
                cache.prefixes[0][d] = conv_stratum(*cache.fs[0], *cache.fs[1], d);
                for (size_t j = 1; j < cache.prefixes.size(); ++j)
                    cache.prefixes[j][d] = conv_stratum(cache.prefixes[j - 1], *cache.fs[j + 1], d);
            }
    }

    SequenceFamily fam;
    fam.names = names;
    fam.variables = binding.variables;
    fam.cutoff = cutoff;
    fam.n_max = n_max;
    for (int s = 0; s < nseq; ++s) {
        std::vector<TruncatedSeries> row;
        row.reserve(W);
        for (int idx = 0; idx < W; ++idx) {
            TruncatedSeries ser(binding.variables, cutoff);
            for (int d = 0; d <= cutoff; ++d)
                for (const auto& [e, c] : strata[s][idx][d]) ser.set_coeff(e, c);
            row.push_back(std::move(ser));
        }
        fam.entries.emplace(names[s], std::move(row));
    }
    return fam;
}

SequenceFamily solve_sequences(const ModelSpec& model, int cutoff, int n_max) {
    return solve_sequences(model, cutoff, n_max, CouplingBinding::formal(model.coupling_names()));
}

SequenceFamily solve_sequences(const ModelSpec& model, int cutoff, int n_max,
                               const CouplingBinding& binding) {
    auto eqs = build_recursion_system(model);
    if (n_max < 0) n_max = default_n_max(eqs, cutoff);
    return solve_system(eqs, cutoff, n_max, binding);
}

std::map<std::string, TruncatedSeries> stabilized_limit(const SequenceFamily& fam) {
    std::map<std::string, TruncatedSeries> out;
    for (const auto& name : fam.names) out.emplace(name, fam.at(name, fam.n_max));
    return out;
}

std::map<std::string, TruncatedSeries> distance_free_solution(
    const std::vector<SequenceEquation>& eqs, int cutoff, const CouplingBinding& binding) {
    std::vector<SequenceEquation> collapsed = eqs;
    for (auto& eq : collapsed) {
        eq.head_offset = 0;
        eq.row_offset = 0;
        for (auto& t : eq.rhs.terms)
            for (auto& f : t.factors) f.offset = 0;
    }
    auto fam = solve_system(collapsed, cutoff, 0, binding);
    return stabilized_limit(fam);
}

std::map<std::string, TruncatedSeries> distance_free_solution(const ModelSpec& model, int cutoff,
                                                              const CouplingBinding& binding) {
    return distance_free_solution(build_recursion_system(model), cutoff, binding);
}

Rational residual(const SequenceFamily& fam, const std::vector<SequenceEquation>& eqs,
                  const CouplingBinding& binding) {
    Rational worst(0);
    for (const auto& eq : eqs) {
        int max_off = eq.head_offset;
        for (const auto& t : eq.rhs.terms)
            for (const auto& f : t.factors) max_off = std::max(max_off, f.offset);
        for (int h = 0; h + eq.head_offset <= fam.n_max; ++h) {
            int n = h - eq.head_offset;
            if (n + max_off > fam.n_max) break;  // keep clear of clamped references
            TruncatedSeries acc = TruncatedSeries::constant(fam.variables, fam.cutoff, -eq.lhs);
            for (const auto& t : eq.rhs.terms) {
                auto r = binding.resolve(t.mono);
                TruncatedSeries term =
                    TruncatedSeries::monomial(fam.variables, fam.cutoff, r.exps, t.scalar * r.scale);
                bool dead = false;
                for (const auto& f : t.factors) {
                    int idx = n + f.offset;
                    if (idx < 0) {
                        dead = true;
                        break;
                    }
                    term = term * fam.at(f.name, idx);
                }
                if (!dead) acc += term;
            }
            Rational m = acc.max_abs_coeff();
            if (m > worst) worst = m;
        }
    }
    return worst;
}

int stabilization_violation(const SequenceFamily& fam, int stride) {
    int worst = -1;
    for (const auto& name : fam.names) {
        const auto& top = fam.at(name, fam.n_max);
        for (int d = 0; d <= fam.cutoff; ++d) {
            auto ref = top.degree_slice(d);
            for (int i = std::max(0, d * stride); i < fam.n_max; ++i) {
                if (fam.at(name, i).degree_slice(d) != ref) {
                    worst = std::max(worst, d);
                    break;
                }
            }
        }
    }
    return worst;
}

std::vector<TruncatedSeries> integral_of_motion(const SequenceFamily& fam,
                                                const CouplingBinding& binding) {
    if (fam.entries.find("R") == fam.entries.end() || fam.names.size() != 1)
        throw usage_error("integral_of_motion: requires the tetravalent family");
    auto gb = binding.resolve(CouplingMono{{"g", 1}});
    TruncatedSeries g = TruncatedSeries::monomial(fam.variables, fam.cutoff, gb.exps, gb.scale);
    TruncatedSeries one = TruncatedSeries::constant(fam.variables, fam.cutoff, Rational(1));
    std::vector<TruncatedSeries> out;
    for (int n = 0; n + 1 <= fam.n_max; ++n) {
        const auto& x = fam.at("R", n);
        const auto& y = fam.at("R", n + 1);
        out.push_back(x * y * (one - g * x - g * y) - x - y);
    }
    return out;
}

}  // namespace mapdist
