#include "mapdist/series_json.hpp"

#include <json.hpp>

#include "mapdist/errors.hpp"

namespace mapdist {

using ordered_json = nlohmann::ordered_json;

namespace {

ordered_json series_obj(const TruncatedSeries& s) {
    ordered_json j;
    j["variables"] = s.variables();
    j["cutoff"] = s.cutoff();
    ordered_json terms = ordered_json::array();
    for (const auto& [e, c] : s.terms()) {
        ordered_json t;
        t["exp"] = e;
        t["num"] = c.num_str();
        t["den"] = c.den_str();
        terms.push_back(std::move(t));
    }
    j["terms"] = std::move(terms);
    return j;
}

}  // namespace

std::string series_to_json(const TruncatedSeries& s) { return series_obj(s).dump(); }

TruncatedSeries series_from_json(const std::string& text) {
    ordered_json j = ordered_json::parse(text);
    TruncatedSeries s(j.at("variables").get<std::vector<std::string>>(),
                      j.at("cutoff").get<int>());
    for (const auto& t : j.at("terms")) {
        ExpVec e = t.at("exp").get<ExpVec>();
        Rational num = Rational::parse(t.at("num").get<std::string>());
        Rational den = Rational::parse(t.at("den").get<std::string>());
        if (den.is_zero()) throw usage_error("series_from_json: zero denominator");
        s.set_coeff(e, num / den);
    }
    return s;
}

std::string family_to_json(const SequenceFamily& fam) {
    ordered_json j;
    j["variables"] = fam.variables;
    j["cutoff"] = fam.cutoff;
    j["n_max"] = fam.n_max;
    ordered_json entries;
    for (const auto& name : fam.names)
        for (int n = 0; n <= fam.n_max; ++n)
            entries[name + "[" + std::to_string(n) + "]"] = series_obj(fam.at(name, n));
    j["entries"] = std::move(entries);
    return j.dump();
}

}  // namespace mapdist
