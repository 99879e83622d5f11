#include "mapdist/model.hpp"

#include <algorithm>
#include <set>

#include "mapdist/errors.hpp"

namespace mapdist {

std::vector<std::string> ModelSpec::coupling_names() const {
    std::vector<std::string> out;
    std::set<std::string> seen;
    auto add = [&](const std::string& s) {
        if (!s.empty() && seen.insert(s).second) out.push_back(s);
    };
    add(g_name);
    for (const auto& [v, name] : weights) add(name);
    for (const auto& [v, name] : white_weights) add(name);
    return out;
}

ModelSpec ModelSpec::tetravalent() { return even_valence({{4, "g"}}); }

ModelSpec ModelSpec::even_valence(std::vector<std::pair<int, std::string>> w) {
    for (const auto& [v, name] : w)
        if (v < 4 || v % 2 != 0) throw usage_error("even_valence: valences must be even, >= 4");
    ModelSpec m;
    m.family = Family::EvenValence;
    m.weights = std::move(w);
    return m;
}

ModelSpec ModelSpec::trivalent() { return arbitrary_valence({{3, "g"}}); }

ModelSpec ModelSpec::arbitrary_valence(std::vector<std::pair<int, std::string>> w) {
    for (const auto& [v, name] : w)
        if (v < 3) throw usage_error("arbitrary_valence: valences must be >= 3");
    ModelSpec m;
    m.family = Family::ArbitraryValence;
    m.weights = std::move(w);
    return m;
}

ModelSpec ModelSpec::bipartite_p_valent(int p) {
    if (p < 3) throw usage_error("bipartite_p_valent: p must be >= 3");
    ModelSpec m = constellation(p, {{1, "gt1"}});
    m.family = Family::BipartitePValent;
    return m;
}

ModelSpec ModelSpec::constellation(int p, std::vector<std::pair<int, std::string>> tilde) {
    if (p < 2) throw usage_error("constellation: p must be >= 2");
    if (tilde.empty()) throw usage_error("constellation: need at least one coupling");
    for (const auto& [k, name] : tilde)
        if (k < 1) throw usage_error("constellation: multipliers must be >= 1");
    ModelSpec m;
    m.family = Family::Constellation;
    m.p = p;
    m.g_name = "g";
    m.weights = std::move(tilde);  // (k, gt_k): black vertices of valence k*p
    return m;
}

ModelSpec ModelSpec::bipartite_even(std::vector<std::pair<int, std::string>> black,
                                    std::vector<std::pair<int, std::string>> white) {
    if (black.empty() || white.empty())
        throw usage_error("bipartite_even: need couplings on both colors");
    for (const auto& [v, name] : black)
        if (v < 2 || v % 2) throw usage_error("bipartite_even: valences must be even");
    for (const auto& [v, name] : white)
        if (v < 2 || v % 2) throw usage_error("bipartite_even: valences must be even");
    ModelSpec m;
    m.family = Family::BipartiteEven;
    m.weights = std::move(black);
    m.white_weights = std::move(white);
    return m;
}

ModelSpec ModelSpec::ising_symmetric() {
    ModelSpec m = bipartite_even({{2, "c"}, {4, "g"}}, {{2, "c"}, {4, "g"}});
    m.family = Family::IsingSymmetric;
    return m;
}

namespace {

using Op = ShiftOperator;

std::vector<SequenceEquation> even_valence_system(const ModelSpec& m) {
    Op q = Op::sigma_power(1) + Op::sigma_power(-1) * Op::diagonal("R");
    Op expr = q;
    for (const auto& [v, name] : m.weights)
        expr = expr - q.pow(v - 1).times_coupling(name);
    return {make_equation(Rational(1), expr, -1)};
}

std::vector<SequenceEquation> arbitrary_valence_system(const ModelSpec& m) {
    Op q = Op::sigma_power(1) + Op::sigma_power(-1) * Op::diagonal("S") * Op::sigma_power(1) +
           Op::sigma_power(-1) * Op::diagonal("R");
    Op expr = q;
    for (const auto& [v, name] : m.weights)
        expr = expr - q.pow(v - 1).times_coupling(name);
    return {make_equation(Rational(0), expr, 0), make_equation(Rational(1), expr, -1)};
}

std::vector<SequenceEquation> constellation_system(const ModelSpec& m) {
    int p = m.p;
    Op q1 = Op::sigma_power(1) +
            Op::sigma_power(-1) * Op::diagonal("X") * Op::sigma_power(2 - p);
    Op q2 = Op::sigma_power(-1) * Op::diagonal("R") +
            Op::sigma_power(p - 2) * Op::diagonal("Y") * Op::sigma_power(1);
    Op expr_black = q2 - q1.pow(p - 1).times_coupling(m.g_name);
    Op expr_white = q1;
    for (const auto& [k, name] : m.weights)
        expr_white = expr_white - q2.pow(p * k - 1).times_coupling(name);
    return {make_equation(Rational(1), expr_black, -1),
            make_equation(Rational(0), expr_black, p - 1),
            make_equation(Rational(0), expr_white, -(p - 1))};
}

std::vector<SequenceEquation> bipartite_even_system(const ModelSpec& m) {
    auto max_index = [](const std::vector<std::pair<int, std::string>>& w) {
        int k = 0;
        for (const auto& [v, name] : w) k = std::max(k, v / 2);
        return k;
    };
    int kx = max_index(m.weights);        // X^(k) generated by black valences
    int kr = max_index(m.white_weights);  // R^(k) generated by white valences
    auto xname = [](int k) { return k == 1 ? std::string("X1") : "X" + std::to_string(k); };
    auto rname = [](int k) { return k == 1 ? std::string("R") : "R" + std::to_string(k); };

    Op q1 = Op::sigma_power(1);
    for (int k = 1; k <= kr; ++k)
        q1 = q1 + Op::sigma_power(1 - 2 * k) * Op::diagonal(rname(k));
    Op q2 = Op::sigma_power(-1) * Op::diagonal("V");
    for (int k = 1; k <= kx; ++k)
        q2 = q2 + Op::sigma_power(-1) * Op::diagonal(xname(k)) * Op::sigma_power(2 * k);

    Op expr_black = q2;
    for (const auto& [v, name] : m.weights)
        expr_black = expr_black - q1.pow(v - 1).times_coupling(name);
    Op expr_white = q1;
    for (const auto& [v, name] : m.white_weights)
        expr_white = expr_white - q2.pow(v - 1).times_coupling(name);

    std::vector<SequenceEquation> eqs;
    eqs.push_back(make_equation(Rational(1), expr_black, -1));
    for (int k = 1; k <= kx; ++k)
        eqs.push_back(make_equation(Rational(0), expr_black, 2 * k - 1));
    for (int k = 1; k <= kr; ++k)
        eqs.push_back(make_equation(Rational(0), expr_white, -(2 * k - 1)));
    return eqs;
}

}  // namespace

std::vector<SequenceEquation> build_recursion_system(const ModelSpec& model) {
    switch (model.family) {
        case Family::EvenValence:
            return even_valence_system(model);
        case Family::ArbitraryValence:
            return arbitrary_valence_system(model);
        case Family::BipartitePValent:
        case Family::Constellation:
            return constellation_system(model);
        case Family::BipartiteEven:
        case Family::IsingSymmetric:
            return bipartite_even_system(model);
    }
    throw usage_error("build_recursion_system: unknown family");
}

std::vector<SequenceEquation> ising_reduced_system() {
    // V_n (1 - g^2 (V_{n+1}V_{n+2} + V_{n+1}V_{n-1} + V_{n-1}V_{n-2}))
    //   = 1 + R_n (c + g (R_{n+1} + R_n + R_{n-1}))
    // R_n = V_n (c + g (R_{n+1} + R_n + R_{n-1}))
    auto term = [](Rational s, CouplingMono mono, std::vector<SymbolFactor> f) {
        std::sort(f.begin(), f.end());
        return SeqTerm{std::move(s), std::move(mono), std::move(f)};
    };
    SequenceEquation veq;
    veq.lhs = Rational(1);
    veq.row_offset = 0;
    veq.head_name = "V";
    veq.head_offset = 0;
    veq.rhs.terms = {
        term(1, {}, {{"V", 0}}),
        term(-1, {{"g", 2}}, {{"V", 0}, {"V", 1}, {"V", 2}}),
        term(-1, {{"g", 2}}, {{"V", 0}, {"V", 1}, {"V", -1}}),
        term(-1, {{"g", 2}}, {{"V", 0}, {"V", -1}, {"V", -2}}),
        term(-1, {{"c", 1}}, {{"R", 0}}),
        term(-1, {{"g", 1}}, {{"R", 0}, {"R", 1}}),
        term(-1, {{"g", 1}}, {{"R", 0}, {"R", 0}}),
        term(-1, {{"g", 1}}, {{"R", 0}, {"R", -1}}),
    };
    SequenceEquation req;
    req.lhs = Rational(0);
    req.row_offset = 0;
    req.head_name = "R";
    req.head_offset = 0;
    req.rhs.terms = {
        term(1, {}, {{"R", 0}}),
        term(-1, {{"c", 1}}, {{"V", 0}}),
        term(-1, {{"g", 1}}, {{"V", 0}, {"R", 1}}),
        term(-1, {{"g", 1}}, {{"V", 0}, {"R", 0}}),
        term(-1, {{"g", 1}}, {{"V", 0}, {"R", -1}}),
    };
    return {veq, req};
}

std::vector<std::string> sequence_names(const ModelSpec& model) {
    std::vector<std::string> names;
    for (const auto& eq : build_recursion_system(model)) names.push_back(eq.head_name);
    return names;
}

}  // namespace mapdist

