#include "mapdist/limits.hpp"

#include <cmath>

#include "mapdist/errors.hpp"

namespace mapdist {

namespace {

// collapse the distance-indexed system to its n-independent form
std::vector<SequenceEquation> collapsed_system(const ModelSpec& model) {
    auto eqs = build_recursion_system(model);
    for (auto& eq : eqs) {
        eq.head_offset = 0;
        for (auto& t : eq.rhs.terms)
            for (auto& f : t.factors) f.offset = 0;
    }
    return eqs;
}

double eval_rhs(const SequenceEquation& eq, const std::map<std::string, double>& couplings,
                const std::map<std::string, double>& values, bool skip_head) {
    double acc = 0.0;
    bool head_skipped = false;
    for (const auto& t : eq.rhs.terms) {
        if (skip_head && !head_skipped && t.mono.empty() && t.factors.size() == 1 &&
            t.factors[0].name == eq.head_name && t.scalar == Rational(1)) {
            head_skipped = true;
            continue;
        }
        double v = t.scalar.to_double();
        for (const auto& [name, e] : t.mono)
            for (int k = 0; k < e; ++k) v *= couplings.at(name);
        for (const auto& f : t.factors) v *= values.at(f.name);
        acc += v;
    }
    return acc;
}

}  // namespace

double limits_residual(const ModelSpec& model, const std::map<std::string, double>& couplings,
                       const std::map<std::string, double>& values) {
    double worst = 0.0;
    for (const auto& eq : collapsed_system(model)) {
        double r = eval_rhs(eq, couplings, values, false) - eq.lhs.to_double();
        worst = std::max(worst, std::fabs(r));
    }
    return worst;
}

std::map<std::string, double> solve_limits(const ModelSpec& model,
                                           const std::map<std::string, double>& couplings,
                                           double tol) {
    auto eqs = collapsed_system(model);
    std::map<std::string, double> values;
    for (const auto& eq : eqs) values[eq.head_name] = eq.lhs.to_double();

    double damping = 1.0;
    double prev_change = 1e300;
    for (int iter = 0; iter < 200000; ++iter) {
        double change = 0.0;
        for (const auto& eq : eqs) {
            // head = lhs - (other terms); rhs holds head + tail = lhs
            double tail = eval_rhs(eq, couplings, values, true);
            double target = eq.lhs.to_double() - tail;
            double& v = values[eq.head_name];
            double next = (1.0 - damping) * v + damping * target;
            change = std::max(change, std::fabs(next - v));
            v = next;
        }
        if (change < 1e-16) break;
        if (change > prev_change * 1.2 && damping > 0.1) damping *= 0.5;
        prev_change = change;
        if (change > 1e12)
            throw usage_error("solve_limits: iteration diverged (couplings beyond criticality?)");
    }
    double res = limits_residual(model, couplings, values);
    if (!(res < tol * 100 + 1e-12))
        throw usage_error("solve_limits: residual " + std::to_string(res) +
                          " did not reach tolerance");
    return values;
}

}  // namespace mapdist
