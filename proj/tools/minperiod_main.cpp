// Command-line front end: every subcommand prints one JSON document and
// exits 0 on success, 1 on error, 2 when a consistency flag was raised or
// a verification region failed.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "minperiod/json_io.hpp"
#include "minperiod/surface.hpp"

namespace {

using minperiod::json;

void emit(const json& j, const std::string& output) {
    if (output.empty()) {
        std::cout << j.dump(2) << "\n";
        return;
    }
    std::ofstream out(output);
    if (!out) throw minperiod::Error(minperiod::Error::Code::BadInput, "cannot write " + output);
    out << j.dump(2) << "\n";
}

int run(int argc, char** argv) {
    CLI::App app{"Minimal period lengths and Seshadri-type bounds for principally "
                 "polarized abelian varieties"};
    app.require_subcommand(1);

    // svp
    auto* svp = app.add_subcommand("svp", "Shortest lattice vector of the polarization form");
    std::string svp_input, svp_output;
    bool svp_oracle = false;
    int svp_box = 0;
    svp->add_option("--input", svp_input, "period matrix JSON")->required();
    svp->add_flag("--oracle", svp_oracle, "use the exhaustive box oracle");
    svp->add_option("--box", svp_box, "oracle box radius (default: certified)");
    svp->add_option("--output", svp_output, "write JSON here instead of stdout");

    // bounds
    auto* bounds = app.add_subcommand("bounds", "Evaluate all Seshadri/period bounds");
    int b_genus = 0, b_gonality = 0;
    bool b_jacobian = false;
    std::string b_input, b_output;
    bounds->add_option("--genus", b_genus, "genus g >= 1");
    bounds->add_option("--gonality", b_gonality, "gonality d >= 2");
    bounds->add_flag("--jacobian", b_jacobian, "input is a Jacobian");
    bounds->add_option("--input", b_input, "period matrix JSON (enables m(A))");
    bounds->add_option("--output", b_output, "write JSON here instead of stdout");

    // surface
    auto* surface = app.add_subcommand("surface", "Intersection computations on C x C");
    int s_genus = 0, s_gonality = 0;
    std::string s_output;
    surface->add_option("--genus", s_genus, "genus g >= 2")->required();
    surface->add_option("--gonality", s_gonality, "gonality d >= 2");
    surface->add_option("--output", s_output, "write JSON here instead of stdout");

    // blowup
    auto* blowup = app.add_subcommand("blowup", "Verify the local blow-up construction");
    int n_dim = 2, bl_samples = 1000, bl_resolution = 512;
    double bl_lambda = 0.8, bl_eta = 0.05, bl_delta = -1.0, bl_tol = 1e-8, bl_norm_tol = 1e-6;
    std::uint64_t bl_seed = 1;
    std::string bl_mode = "analytic", bl_output;
    blowup->add_option("--dim", n_dim, "complex dimension n >= 2");
    blowup->add_option("--lambda", bl_lambda, "ball radius");
    blowup->add_option("--eta", bl_eta, "outer slack");
    blowup->add_option("--delta", bl_delta, "inner radius (default lambda/10)");
    blowup->add_option("--samples", bl_samples, "samples per region");
    blowup->add_option("--tol", bl_tol, "region tolerance");
    blowup->add_option("--seed", bl_seed, "sampling seed");
    blowup->add_option("--mode", bl_mode, "analytic | fd")
        ->check(CLI::IsMember({"analytic", "fd"}));
    blowup->add_option("--resolution", bl_resolution, "normalization grid resolution");
    blowup->add_option("--norm-tol", bl_norm_tol, "normalization tolerance");
    blowup->add_option("--output", bl_output, "write JSON here instead of stdout");

    // search
    auto* search = app.add_subcommand("search", "Maximize m(A) over random Siegel samples");
    int se_genus = 1;
    long se_iters = 1000;
    std::uint64_t se_seed = 1;
    double se_spread = 1.0;
    std::string se_output;
    search->add_option("--genus", se_genus, "genus g >= 1")->required();
    search->add_option("--iters", se_iters, "iterations")->required();
    search->add_option("--seed", se_seed, "seed")->required();
    search->add_option("--spread", se_spread, "sampling spread");
    search->add_option("--output", se_output, "write JSON here instead of stdout");

    // analyze
    auto* analyze = app.add_subcommand("analyze", "svp + bounds report in one call");
    std::string a_input, a_output;
    analyze->add_option("--input", a_input, "period matrix JSON")->required();
    analyze->add_option("--output", a_output, "write JSON here instead of stdout");

    CLI11_PARSE(app, argc, argv);

    if (svp->parsed()) {
        minperiod::PeriodMatrix tau = minperiod::load_period_matrix(svp_input);
        minperiod::GramForm g = minperiod::gram_from_period(tau);
        minperiod::ShortestResult r;
        if (svp_oracle) {
            int box = svp_box > 0 ? svp_box : minperiod::certified_box(g);
            r = minperiod::brute_force_shortest(g, box);
        } else {
            r = minperiod::shortest_vector(g);
        }
        emit(minperiod::to_json(r), svp_output);
        return 0;
    }

    if (bounds->parsed()) {
        std::optional<minperiod::PeriodMatrix> tau;
        if (!b_input.empty()) tau = minperiod::load_period_matrix(b_input);
        if (b_genus == 0) {
            if (!tau)
                throw minperiod::Error(minperiod::Error::Code::BadInput,
                                       "either --genus or --input is required");
            b_genus = tau->g;
        }
        std::optional<int> d;
        if (bounds->count("--gonality")) d = b_gonality;
        minperiod::BoundsReport r = minperiod::bounds_report(tau, b_genus, d, b_jacobian);
        emit(minperiod::to_json(r), b_output);
        return r.consistency_flags.empty() ? 0 : 2;
    }

    if (surface->parsed()) {
        json j;
        j["genus"] = s_genus;
        j["sigma_degree"] = minperiod::sigma_degree(s_genus);
        j["sqrt_upper"] = minperiod::seshadri_upper_from_surface(
            minperiod::Rational(minperiod::sigma_degree(s_genus)), 2 * s_genus - 2);
        if (surface->count("--gonality")) {
            minperiod::Rational t = minperiod::nef_threshold_gonality(s_genus, s_gonality);
            j["gonality_threshold"] = t.to_double();
            j["gonality_threshold_exact"] = t.str();
        }
        emit(j, s_output);
        return 0;
    }

    if (blowup->parsed()) {
        auto profile = minperiod::BlowupProfile::make(n_dim, bl_lambda, bl_eta, bl_delta);
        auto mode = bl_mode == "fd" ? minperiod::PullbackMode::FiniteDifference
                                    : minperiod::PullbackMode::Analytic;
        std::vector<minperiod::RegionReport> reports;
        reports.push_back(minperiod::verify_region_outer(profile, bl_samples, bl_tol, bl_seed, mode));
        reports.push_back(minperiod::verify_region_inner(profile, bl_samples, bl_tol, bl_seed + 1, mode));
        reports.push_back(minperiod::verify_positivity(profile, bl_samples, bl_seed + 2));
        reports.push_back(minperiod::verify_hopf(n_dim, bl_samples, bl_tol, bl_seed + 3));
        reports.push_back(minperiod::fs_normalization_report(bl_resolution, bl_norm_tol));
        json j = json::array();
        bool all_pass = true;
        for (const auto& r : reports) {
            all_pass = all_pass && r.pass;
            j.push_back(minperiod::to_json(r));
        }
        emit(j, bl_output);
        return all_pass ? 0 : 2;
    }

    if (search->parsed()) {
        minperiod::SearchResult r =
            minperiod::search_max_min_period(se_genus, se_iters, se_seed, se_spread);
        emit(minperiod::to_json(r), se_output);
        return 0;
    }

    if (analyze->parsed()) {
        minperiod::PeriodMatrix tau = minperiod::load_period_matrix(a_input);
        minperiod::GramForm g = minperiod::gram_from_period(tau);
        minperiod::ShortestResult sv = minperiod::shortest_vector(g);
        minperiod::BoundsReport br = minperiod::bounds_report(tau, tau.g, std::nullopt, false);
        json j;
        j["svp"] = minperiod::to_json(sv);
        j["bounds"] = minperiod::to_json(br);
        emit(j, a_output);
        return br.consistency_flags.empty() ? 0 : 2;
    }

    return 0;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const minperiod::Error& e) {
        std::cerr << "error (" << minperiod::to_string(e.code()) << "): " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
