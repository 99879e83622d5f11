// mapdist: planar-map enumeration by geodesic distance.
//
// Subcommands: derive, solve, closedform, oracle, continuum, fractal, verify.
// All outputs are deterministic; CSV streams carry a versioned header line.

#include <CLI11.hpp>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "mapdist/acceptance.hpp"
#include "mapdist/census.hpp"
#include "mapdist/characteristic.hpp"
#include "mapdist/diffpoly.hpp"
#include "mapdist/errors.hpp"
#include "mapdist/limits.hpp"
#include "mapdist/model.hpp"
#include "mapdist/one_x.hpp"
#include "mapdist/scaling.hpp"
#include "mapdist/sequence_solver.hpp"
#include "mapdist/series_json.hpp"
#include "mapdist/tau.hpp"
#include "mapdist/asymptotics.hpp"

using namespace mapdist;

namespace {

struct ModelEntry {
    ModelSpec spec;
    std::string help;
};

std::map<std::string, ModelEntry> model_catalog() {
    return {
        {"tetravalent", {ModelSpec::tetravalent(), "tetravalent graphs, coupling g"}},
        {"trivalent", {ModelSpec::trivalent(), "trivalent graphs, coupling g"}},
        {"tritetra",
         {ModelSpec::arbitrary_valence({{3, "g3"}, {4, "g4"}}), "valences 3 and 4 (g3, g4)"}},
        {"tetrahexa",
         {ModelSpec::even_valence({{4, "g4"}, {6, "g6"}}), "valences 4 and 6 (g4, g6)"}},
        {"bipartite3", {ModelSpec::bipartite_p_valent(3), "bicolored trivalent (g, gt1)"}},
        {"bipartite4", {ModelSpec::bipartite_p_valent(4), "bicolored 4-valent (g, gt1)"}},
        {"constellation32",
         {ModelSpec::constellation(3, {{2, "gt2"}}), "3-constellation, hexavalent blacks (g, gt2)"}},
        {"ising", {ModelSpec::ising_symmetric(), "spin-decorated tetravalent (c, g)"}},
    };
}

ModelSpec pick_model(const std::string& name) {
    auto cat = model_catalog();
    auto it = cat.find(name);
    if (it == cat.end()) {
        std::string known;
        for (const auto& [k, v] : cat) known += (known.empty() ? "" : ", ") + k;
        throw usage_error("unknown model '" + name + "' (known: " + known + ")");
    }
    return it->second.spec;
}

std::map<std::string, Rational> parse_couplings(const std::vector<std::string>& kvs) {
    std::map<std::string, Rational> out;
    for (const auto& kv : kvs) {
        auto eq = kv.find('=');
        if (eq == std::string::npos)
            throw usage_error("coupling must be name=value, got '" + kv + "'");
        out[kv.substr(0, eq)] = Rational::parse(kv.substr(eq + 1));
    }
    return out;
}

// output sink: path or "-" for stdout
class Sink {
  public:
    explicit Sink(const std::string& path) {
        if (path != "-") {
            file_.open(path);
            if (!file_) throw usage_error("cannot open output file " + path);
        }
    }
    std::ostream& out() { return file_.is_open() ? file_ : std::cout; }

  private:
    std::ofstream file_;
};

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12e", v);
    return buf;
}

int cmd_derive(const std::string& model_name, Sink& sink) {
    auto eqs = build_recursion_system(pick_model(model_name));
    for (const auto& eq : eqs) sink.out() << to_text(eq) << "\n";
    return 0;
}

int cmd_solve(const std::string& model_name, int cutoff, int n_max,
              const std::vector<std::string>& couplings, const std::string& format, Sink& sink) {
    auto model = pick_model(model_name);
    CouplingBinding binding;
    if (couplings.empty()) {
        binding = CouplingBinding::formal(model.coupling_names());
    } else {
        std::vector<std::pair<std::string, Rational>> scales;
        for (const auto& [k, v] : parse_couplings(couplings)) scales.emplace_back(k, v);
        binding = CouplingBinding::weighted_t(scales);
    }
    auto fam = solve_sequences(model, cutoff, n_max, binding);
    if (format == "json") {
        sink.out() << family_to_json(fam) << "\n";
    } else {
        sink.out() << "# mapdist csv v1 solve\nname,n,exponents,num,den\n";
        for (const auto& name : fam.names)
            for (int n = 0; n <= fam.n_max; ++n)
                for (const auto& [e, c] : fam.at(name, n).terms()) {
                    sink.out() << name << "," << n << ",";
                    for (size_t i = 0; i < e.size(); ++i)
                        sink.out() << (i ? " " : "") << e[i];
                    sink.out() << "," << c.num_str() << "," << c.den_str() << "\n";
                }
    }
    return 0;
}

int cmd_closedform(const std::string& model_name, const std::vector<std::string>& coupling_args,
                   int n_limit, int cutoff, Sink& sink) {
    auto model = pick_model(model_name);
    auto rat = parse_couplings(coupling_args);
    std::map<std::string, double> coup;
    std::vector<std::pair<std::string, Rational>> scales;
    for (const auto& name : model.coupling_names()) {
        auto it = rat.find(name);
        if (it == rat.end()) throw usage_error("missing coupling " + name);
        coup[name] = it->second.to_double();
        scales.emplace_back(name, it->second);
    }
    auto lims = solve_limits(model, coup);
    auto ce = characteristic_equation(model, coup, lims);
    auto fam = solve_sequences(model, cutoff, -1, CouplingBinding::weighted_t(scales));

    auto series_val = [&](const std::string& name, int n) {
        double p[1] = {1.0};
        return fam.at(name, n).evaluate(p);
    };
    sink.out() << "# mapdist csv v1 closedform\nsequence,n,closed,series,absdiff\n";
    auto emit = [&](const std::string& name, int n, double closed) {
        double s = series_val(name, n);
        sink.out() << name << "," << n << "," << fmt(closed) << "," << fmt(s) << ","
                   << fmt(std::fabs(closed - s)) << "\n";
    };
    switch (model.family) {
        case Family::EvenValence: {
            auto sol = make_even_valence_tau(ce.disk_roots, lims.at("R"));
            for (int n = 0; n <= n_limit; ++n) emit("R", n, closed_R_n(sol, n));
            break;
        }
        case Family::ArbitraryValence: {
            TrivalentClosedForm cf{coup.at("g"), lims.at("R"), lims.at("S"), ce.disk_roots[0]};
            if (model.weights.size() != 1 || model.weights[0].first != 3)
                throw usage_error("closedform: general mixed valences have no closed form here");
            for (int n = 0; n <= n_limit; ++n) emit("R", n, cf.r_n(n));
            for (int n = 0; n <= n_limit; ++n) emit("S", n, cf.s_n(n));
            break;
        }
        case Family::BipartitePValent:
        case Family::Constellation: {
            auto sol = make_bipartite_tau(ce.disk_roots, lims.at("R"), model.p);
            polish_lambdas(sol);
            for (int n = 0; n <= n_limit; ++n) emit("R", n, closed_R_n(sol, n));
            break;
        }
        default:
            throw usage_error("closedform: no closed form catalogued for this model");
    }
    return 0;
}

int cmd_oracle(const std::string& family_name, int p, int n_vertices, const std::string& emit,
               Sink& sink) {
    OracleFamily fam;
    if (family_name == "tetravalent")
        fam = OracleFamily::Tetravalent;
    else if (family_name == "trivalent")
        fam = OracleFamily::Trivalent;
    else if (family_name == "bipartite")
        fam = OracleFamily::BipartiteP;
    else
        throw usage_error("unknown oracle family '" + family_name +
                          "' (tetravalent, trivalent, bipartite)");
    if (emit == "census") {
        int workers = 1;
        if (const char* env = std::getenv("MAPDIST_WORKERS")) workers = std::max(1, atoi(env));
        auto hist = census(fam, p, n_vertices, workers);
        sink.out() << "# mapdist csv v1 census\ndistance,count\n";
        for (const auto& [d, c] : hist) sink.out() << d << "," << c << "\n";
        return 0;
    }
    if (emit != "trees") throw usage_error("--emit must be census or trees");
    std::function<void(const BlossomNode&, std::ostream&)> dump =
        [&](const BlossomNode& n, std::ostream& os) {
            switch (n.kind) {
                case BlossomNode::Kind::WhiteLeaf: os << "W"; return;
                case BlossomNode::Kind::BlackLeaf: os << "B"; return;
                case BlossomNode::Kind::Vertex: {
                    os << (n.color == 0 ? "Vb(" : n.color == 1 ? "Vw(" : "V(");
                    bool first = true;
                    for (const auto& c : n.children) {
                        if (!first) os << ",";
                        first = false;
                        dump(c, os);
                    }
                    os << ")";
                }
            }
        };
    sink.out() << "# mapdist csv v1 trees\ntree,distance\n";
    for_each_tree(fam, p, n_vertices, [&](const BlossomTree& t) {
        dump(t.top, sink.out());
        sink.out() << "," << contour_distance(t) << "\n";
    });
    return 0;
}

int cmd_continuum(const std::string& function, double r_min, double r_max, int steps,
                  Sink& sink) {
    ScalingFunction f = ScalingFunction::pure_gravity();
    DiffPoly ode = stationary_ode(1);
    if (function == "puregravity") {
    } else if (function == "wronskian2") {
        f = ScalingFunction::wronskian(2);
        ode = stationary_ode(2);
    } else if (function == "ising") {
        f = ScalingFunction::ising_sinh();
        ode = ising_ode();
    } else {
        throw usage_error("unknown function '" + function +
                          "' (puregravity, wronskian2, ising)");
    }
    sink.out() << "# mapdist csv v1 continuum\nr,F,G,ode_residual\n";
    int order = ode.max_order();
    for (int i = 0; i < steps; ++i) {
        double r = r_min + (r_max - r_min) * i / std::max(1, steps - 1);
        auto jet = f.jet(r, order);
        std::vector<double> derivs(order + 1);
        for (int k = 0; k <= order; ++k) derivs[k] = jet.derivative(k);
        sink.out() << fmt(r) << "," << fmt(jet.value()) << "," << fmt(-jet.derivative(1)) << ","
                   << fmt(ode.eval(derivs)) << "\n";
    }
    return 0;
}

int cmd_fractal(int n, const std::string& orders_arg, Sink& sink) {
    std::vector<int> orders;
    std::stringstream ss(orders_arg);
    std::string tok;
    while (std::getline(ss, tok, ',')) orders.push_back(std::stoi(tok));
    auto ratios = fractal_ratios(n, orders);
    double law = 3.0 / 56.0 * std::pow(n, 4);
    sink.out() << "# mapdist csv v1 fractal\nn,N,ratio,quartic_law\n";
    for (size_t i = 0; i < orders.size(); ++i)
        sink.out() << n << "," << orders[i] << "," << fmt(ratios[i]) << "," << fmt(law) << "\n";
    return 0;
}

int cmd_verify() {
    auto results = acceptance::run_all(&std::cout);
    int failures = 0;
    for (const auto& r : results)
        if (!r.pass) ++failures;
    std::cout << results.size() << " criteria, " << failures << " failed\n";
    return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"planar-map enumeration refined by geodesic distance"};
    app.require_subcommand(1);

    std::string model = "tetravalent", format = "csv", output = "-";
    std::string family = "tetravalent", emit = "census", function = "puregravity";
    std::string orders = "500,1000,2000";
    std::vector<std::string> couplings;
    int cutoff = 8, n_max = -1, n_limit = 20, p = 3, n_vertices = 3, steps = 30, fr_n = 3;
    double r_min = 0.3, r_max = 6.0;

    auto* derive = app.add_subcommand("derive", "print the distance-indexed system of a model");
    derive->add_option("--model", model, "model name");
    derive->add_option("--output", output, "output path or -");

    auto* solve = app.add_subcommand("solve", "solve a model as exact truncated series");
    solve->add_option("--model", model, "model name");
    solve->add_option("--cutoff", cutoff, "series truncation order")->required();
    solve->add_option("--n-max", n_max, "largest distance index (default derived)");
    solve->add_option("--couplings", couplings,
                      "name=value list; collapses the series onto one variable t");
    solve->add_option("--format", format, "csv or json");
    solve->add_option("--output", output, "output path or -");

    auto* closed = app.add_subcommand("closedform", "closed forms vs series evaluation");
    closed->add_option("--model", model, "model name");
    closed->add_option("--couplings", couplings, "name=value list (required)")->required();
    closed->add_option("--n-limit", n_limit, "largest distance");
    closed->add_option("--cutoff", cutoff, "series order for the comparison column");
    closed->add_option("--output", output, "output path or -");

    auto* oracle = app.add_subcommand("oracle", "exhaustive tree enumeration");
    oracle->add_option("--family", family, "tetravalent, trivalent or bipartite");
    oracle->add_option("--p", p, "valence for the bipartite family");
    oracle->add_option("--n-vertices", n_vertices, "tree size")->required();
    oracle->add_option("--emit", emit, "census or trees");
    oracle->add_option("--output", output, "output path or -");

    auto* cont = app.add_subcommand("continuum", "scaling functions and flow residuals");
    cont->add_option("--function", function, "puregravity, wronskian2 or ising");
    cont->add_option("--r-min", r_min, "grid start");
    cont->add_option("--r-max", r_max, "grid end");
    cont->add_option("--steps", steps, "grid points");
    cont->add_option("--output", output, "output path or -");

    auto* fractal = app.add_subcommand("fractal", "coefficient-ratio growth check");
    fractal->add_option("--n", fr_n, "distance");
    fractal->add_option("--orders", orders, "comma-separated coefficient orders");
    fractal->add_option("--output", output, "output path or -");

    app.add_subcommand("verify", "run the acceptance suite");

    try {
        app.parse(argc, argv);
        Sink sink(output);
        if (app.got_subcommand("derive")) return cmd_derive(model, sink);
        if (app.got_subcommand("solve"))
            return cmd_solve(model, cutoff, n_max, couplings, format, sink);
        if (app.got_subcommand("closedform"))
            return cmd_closedform(model, couplings, n_limit, cutoff, sink);
        if (app.got_subcommand("oracle"))
            return cmd_oracle(family, p, n_vertices, emit, sink);
        if (app.got_subcommand("continuum"))
            return cmd_continuum(function, r_min, r_max, steps, sink);
        if (app.got_subcommand("fractal")) return cmd_fractal(fr_n, orders, sink);
        if (app.got_subcommand("verify")) return cmd_verify();
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        std::cerr << "{\"kind\":\"usage\",\"message\":\"" << e.what() << "\"}\n";
        return 2;
    } catch (const usage_error& e) {
        std::cerr << "{\"kind\":\"usage\",\"message\":\"" << e.what() << "\"}\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "{\"kind\":\"error\",\"message\":\"" << e.what() << "\"}\n";
        return 1;
    }
    return 2;
}
