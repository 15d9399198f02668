#include "minperiod/json_io.hpp"

#include <fstream>

namespace minperiod {

namespace {

struct ParsedMatrix {
    Eigen::MatrixXd values;
    RatMatrix exact;
    bool all_exact = true;
};

ParsedMatrix parse_matrix(const json& j, int g, const char* name) {
    if (!j.is_array() || static_cast<int>(j.size()) != g)
        throw Error(Error::Code::BadDimension, std::string(name) + " must be a g x g array");
    ParsedMatrix out;
    out.values.resize(g, g);
    out.exact.assign(g, std::vector<Rational>(g, Rational(0)));
    for (int i = 0; i < g; ++i) {
        const json& row = j[i];
        if (!row.is_array() || static_cast<int>(row.size()) != g)
            throw Error(Error::Code::BadDimension, std::string(name) + " has a ragged row");
        for (int k = 0; k < g; ++k) {
            const json& e = row[k];
            if (e.is_string()) {
                Rational r = Rational::parse(e.get<std::string>());
                out.exact[i][k] = r;
                out.values(i, k) = r.to_double();
            } else if (e.is_number_integer()) {
                Rational r(e.get<std::int64_t>());
                out.exact[i][k] = r;
                out.values(i, k) = r.to_double();
            } else if (e.is_number()) {
                out.all_exact = false;
                out.values(i, k) = e.get<double>();
            } else {
                throw Error(Error::Code::BadInput,
                            std::string(name) + " entries must be numbers or \"p/q\" strings");
            }
        }
    }
    return out;
}

json matrix_to_json(const Eigen::MatrixXd& m) {
    json rows = json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
        rows.push_back(row);
    }
    return rows;
}

json rat_matrix_to_json(const RatMatrix& m) {
    json rows = json::array();
    for (const auto& r : m) {
        json row = json::array();
        for (const auto& e : r) row.push_back(e.str());
        rows.push_back(row);
    }
    return rows;
}

json int_vector_to_json(const IntVector& v) {
    json a = json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(v[i]);
    return a;
}

template <typename T>
json opt(const std::optional<T>& v) {
    if (v) return json(*v);
    return json(nullptr);
}

} // namespace

PeriodMatrix parse_period_matrix(const json& j) {
    if (!j.is_object() || !j.contains("g") || !j.contains("re") || !j.contains("im"))
        throw Error(Error::Code::BadInput, "period matrix JSON needs keys g, re, im");
    const int g = j.at("g").get<int>();
    if (g < 1) throw Error(Error::Code::BadDimension, "g must be >= 1");
    ParsedMatrix re = parse_matrix(j.at("re"), g, "re");
    ParsedMatrix im = parse_matrix(j.at("im"), g, "im");
    if (re.all_exact && im.all_exact) return validate_period_matrix(re.exact, im.exact);
    return validate_period_matrix(re.values, im.values);
}

PeriodMatrix load_period_matrix(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(Error::Code::BadInput, "cannot open " + path);
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw Error(Error::Code::BadInput, "invalid JSON in " + path + ": " + e.what());
    }
    return parse_period_matrix(j);
}

json to_json(const PeriodMatrix& tau) {
    json j;
    j["g"] = tau.g;
    if (tau.has_exact()) {
        j["re"] = rat_matrix_to_json(*tau.re_exact);
        j["im"] = rat_matrix_to_json(*tau.im_exact);
    } else {
        j["re"] = matrix_to_json(tau.re);
        j["im"] = matrix_to_json(tau.im);
    }
    return j;
}

json to_json(const ShortestResult& r) {
    json j;
    j["value"] = r.value;
    j["vector"] = {{"m", int_vector_to_json(r.vector.m)}, {"n", int_vector_to_json(r.vector.n)}};
    j["method"] = r.method;
    j["num_minimizers"] = r.num_minimizers;
    return j;
}

json to_json(const BoundsReport& r) {
    json j;
    j["g"] = r.g;
    j["m_A"] = opt(r.m_A);
    j["lower_theorem"] = opt(r.lower_theorem);
    j["lower_nakamaye"] = r.lower_nakamaye;
    j["lower_corollary"] = r.lower_corollary;
    j["upper_ekl"] = r.upper_ekl;
    j["jacobian_upper_sqrt"] = opt(r.jacobian_upper_sqrt);
    j["gonality_upper"] = opt(r.gonality_upper);
    j["gonality_upper_exact"] =
        r.gonality_upper_exact ? json(r.gonality_upper_exact->str()) : json(nullptr);
    j["bs1_benchmark"] = r.bs1_benchmark;
    j["bs2_jacobian_upper"] = opt(r.bs2_jacobian_upper);
    j["gonality_period_upper"] = opt(r.gonality_period_upper);
    j["effective_lower"] = r.effective_lower;
    j["gap_to_ekl_upper"] = r.gap_to_ekl_upper;
    j["consistency_flags"] = r.consistency_flags;
    j["notes"] = r.notes;
    return j;
}

json to_json(const RegionReport& r) {
    json j;
    j["region"] = r.region;
    j["samples"] = r.samples;
    j["max_abs_deviation"] = r.max_abs_deviation;
    j["tol"] = r.tol;
    j["pass"] = r.pass;
    if (r.min_eigenvalue) j["min_eigenvalue"] = *r.min_eigenvalue;
    if (r.value) j["value"] = *r.value;
    return j;
}

json to_json(const SearchResult& r) {
    json j;
    j["g"] = r.g;
    j["iterations"] = r.iterations;
    j["best_tau"] = to_json(r.best_tau);
    j["best_m"] = r.best_m;
    j["bs1_reference"] = r.bs1_reference;
    j["ratio"] = r.ratio;
    j["seed"] = r.seed;
    return j;
}

} // namespace minperiod
