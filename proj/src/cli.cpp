#include <meanbound/cli.hpp>

#include <meanbound/analysis.hpp>
#include <meanbound/means.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace meanbound::cli {

namespace {

// Shortest round-trip decimal (up to 17 significant digits); deterministic
// and locale-free, used for every numeric field.
std::string format_double(double x) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, res.ptr);
}

double parse_real(std::string_view text, const char* what) {
    double value = 0.0;
    const auto res = std::from_chars(text.data(), text.data() + text.size(), value);
    if (res.ec != std::errc{} || res.ptr != text.data() + text.size())
        throw std::invalid_argument(std::string(what) + ": cannot parse '" + std::string(text) +
                                    "' as a real number");
    return value;
}

means::MeanKind parse_mean_kind(const std::string& text) {
    using Tag = means::MeanKind::Tag;
    if (text == "toader") return means::MeanKind{Tag::toader};
    if (text == "centroidal") return means::MeanKind{Tag::centroidal};
    if (text == "contraharmonic") return means::MeanKind{Tag::contraharmonic};
    if (text.rfind("power:", 0) == 0)
        return means::MeanKind{Tag::power, parse_real(text.substr(6), "power exponent")};
    if (text.rfind("convex:", 0) == 0)
        return means::MeanKind{Tag::convex_centroidal, parse_real(text.substr(7), "convex weight")};
    throw std::invalid_argument("unknown mean kind '" + text +
                                "' (expected toader, centroidal, contraharmonic, power:P "
                                "or convex:X)");
}

// Resolves --output: returns the stream to write results to, keeping the
// file alive in `file` when a path was given.
std::ostream& open_sink(const RunConfig& config, std::ofstream& file, std::ostream& out) {
    if (config.output_path.empty()) return out;
    file.open(config.output_path, std::ios::binary);
    if (!file)
        throw std::invalid_argument("cannot open output file '" + config.output_path + "'");
    return file;
}

void warn_tolerances(const RunConfig& config, bool verify_cmd, std::ostream& err) {
    if (verify_cmd && config.band < 1e-15)
        err << "warning: --band " << format_double(config.band)
            << " is below achievable binary64 precision (1e-15)\n";
    if (!verify_cmd && config.x_tol < 4.5e-16)
        err << "warning: --xtol " << format_double(config.x_tol)
            << " is below achievable binary64 abscissa resolution\n";
}

int cmd_eval(const means::MeanKind& kind, double a, double b, std::ostream& out) {
    const means::PositivePair pair{a, b};
    out << format_double(means::evaluate(kind, pair)) << '\n';
    return 0;
}

int cmd_verify(const RunConfig& config, const std::vector<std::string>& id_names,
               std::ostream& out, std::ostream& err) {
    std::vector<analysis::InequalityId> ids;
    if (id_names.empty()) {
        ids = analysis::all_inequalities();
    } else {
        for (const std::string& name : id_names) {
            const auto id = analysis::parse_inequality_id(name);
            if (!id) throw std::invalid_argument("unknown inequality id '" + name + "'");
            ids.push_back(*id);
        }
    }
    warn_tolerances(config, true, err);

    std::ofstream file;
    std::ostream& sink = open_sink(config, file, out);
    bool all_clean = true;
    if (config.format == OutputFormat::csv) {
        sink << "inequality_id,samples,violations,inconclusive,min_margin,worst_a,worst_b\n";
        for (const auto id : ids) {
            const auto rep = analysis::verify_inequality(id, config.samples, config.seed,
                                                         config.band);
            all_clean = all_clean && rep.violations == 0;
            sink << analysis::to_string(id) << ',' << rep.samples << ',' << rep.violations << ','
                 << rep.inconclusive << ',' << format_double(rep.min_margin) << ','
                 << format_double(rep.worst_pair.a()) << ',' << format_double(rep.worst_pair.b())
                 << '\n';
        }
    } else {
        nlohmann::ordered_json rows = nlohmann::ordered_json::array();
        for (const auto id : ids) {
            const auto rep = analysis::verify_inequality(id, config.samples, config.seed,
                                                         config.band);
            all_clean = all_clean && rep.violations == 0;
            rows.push_back({{"inequality_id", analysis::to_string(id)},
                            {"samples", rep.samples},
                            {"violations", rep.violations},
                            {"inconclusive", rep.inconclusive},
                            {"min_margin", rep.min_margin},
                            {"worst_a", rep.worst_pair.a()},
                            {"worst_b", rep.worst_pair.b()}});
        }
        sink << nlohmann::ordered_json{{"reports", rows}}.dump(2) << '\n';
    }
    return all_clean ? 0 : 1;
}

int cmd_sharpness(const RunConfig& config, std::ostream& out, std::ostream& err) {
    warn_tolerances(config, false, err);
    const auto grid = analysis::sharpness_grid(config.grid_points);
    const auto constants = analysis::sharp_constants();

    std::vector<analysis::SharpnessRecord> records;
    records.reserve(grid.size());
    bool any_clamped = false;
    double min_x = std::numeric_limits<double>::infinity();
    double max_x = -std::numeric_limits<double>::infinity();
    for (const double t : grid) {
        records.push_back(analysis::solve_sharpness(t, config.x_tol));
        const auto& rec = records.back();
        any_clamped = any_clamped || rec.clamped;
        min_x = std::min(min_x, rec.x_star);
        max_x = std::max(max_x, rec.x_star);
    }

    std::ofstream file;
    std::ostream& sink = open_sink(config, file, out);
    if (config.format == OutputFormat::csv) {
        sink << "t,x_star,iterations,residual\n";
        for (const auto& rec : records)
            sink << format_double(rec.t) << ',' << format_double(rec.x_star) << ','
                 << rec.iterations << ',' << format_double(rec.residual) << '\n';
        sink << "min_x_star,max_x_star,lambda,mu\n";
        sink << format_double(min_x) << ',' << format_double(max_x) << ','
             << format_double(constants.lambda) << ',' << format_double(constants.mu) << '\n';
    } else {
        nlohmann::ordered_json rows = nlohmann::ordered_json::array();
        for (const auto& rec : records)
            rows.push_back({{"t", rec.t},
                            {"x_star", rec.x_star},
                            {"iterations", rec.iterations},
                            {"residual", rec.residual}});
        nlohmann::ordered_json summary{{"min_x_star", min_x},
                                       {"max_x_star", max_x},
                                       {"lambda", constants.lambda},
                                       {"mu", constants.mu}};
        sink << nlohmann::ordered_json{{"records", rows}, {"summary", summary}}.dump(2) << '\n';
    }
    if (any_clamped) {
        err << "error: sharpness solver clamped to a bracket boundary (numerical inconsistency)\n";
        return 1;
    }
    return 0;
}

int cmd_plotdata(const RunConfig& config, double p, std::ostream& out, std::ostream& err) {
    if (config.grid_points < 2) throw std::invalid_argument("plotdata: need at least 2 grid points");
    warn_tolerances(config, false, err);

    struct Row {
        double r;
        analysis::FChainValues values;
        const char* marker;
    };
    std::vector<Row> rows;
    rows.reserve(config.grid_points + 2);
    const double lo = 1e-6;
    const double hi = 1.0 - 1e-6;
    for (int i = 0; i < config.grid_points; ++i) {
        const double r = lo + (hi - lo) * i / (config.grid_points - 1);
        rows.push_back({r, analysis::f_chain(r, p), ""});
    }
    try {
        const double r0 = analysis::find_f2_root(p);
        rows.push_back({r0, analysis::f_chain(r0, p), "r0"});
        try {
            const double r1 = analysis::find_f1_root(p);
            rows.push_back({r1, analysis::f_chain(r1, p), "r1"});
        } catch (const NoRootError&) {
        }
    } catch (const NoRootError&) {
        // no interior f2 root for this p; emit the grid alone
    }
    std::sort(rows.begin(), rows.end(), [](const Row& x, const Row& y) { return x.r < y.r; });

    std::ofstream file;
    std::ostream& sink = open_sink(config, file, out);
    if (config.format == OutputFormat::csv) {
        sink << "r,f,f1,f2,marker\n";
        for (const auto& row : rows)
            sink << format_double(row.r) << ',' << format_double(row.values.f) << ','
                 << format_double(row.values.f1) << ',' << format_double(row.values.f2) << ','
                 << row.marker << '\n';
    } else {
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (const auto& row : rows)
            arr.push_back({{"r", row.r},
                           {"f", row.values.f},
                           {"f1", row.values.f1},
                           {"f2", row.values.f2},
                           {"marker", row.marker}});
        sink << nlohmann::ordered_json{{"records", arr}}.dump(2) << '\n';
    }
    return 0;
}

void add_output_options(CLI::App* cmd, RunConfig& config, std::string& format_name) {
    cmd->add_option("--format", format_name, "Output format: csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("--output", config.output_path, "Write results to this file instead of stdout");
}

} // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Toader-mean bound toolkit: elliptic integrals, bivariate means, and "
                 "numerical verification of the sharp centroidal-combination bounds"};
    app.require_subcommand(1);

    RunConfig config;
    std::string format_name = "csv";

    std::string kind_text;
    double eval_a = 0.0;
    double eval_b = 0.0;
    auto* eval = app.add_subcommand("eval", "Evaluate a mean at a pair (a, b)");
    eval->add_option("kind", kind_text,
                     "toader | centroidal | contraharmonic | power:P | convex:X")
        ->required();
    eval->add_option("a", eval_a, "first entry, > 0")->required();
    eval->add_option("b", eval_b, "second entry, > 0")->required();

    std::vector<std::string> id_names;
    auto* verify = app.add_subcommand("verify", "Sweep inequalities over seeded random pairs");
    verify->add_option("--ids", id_names, "Comma-separated inequality ids (default: all)")
        ->delimiter(',');
    verify->add_option("--samples", config.samples, "Random pairs per inequality")
        ->check(CLI::PositiveNumber);
    verify->add_option("--seed", config.seed, "PRNG seed");
    verify->add_option("--band", config.band, "Strictness band relative to the value scale")
        ->check(CLI::NonNegativeNumber);
    add_output_options(verify, config, format_name);

    auto* sharpness = app.add_subcommand(
        "sharpness", "Solve J(x) = T over the log-symmetric ratio grid and summarise x*");
    sharpness->add_option("--grid-points", config.grid_points, "Number of ratios in the grid")
        ->check(CLI::Range(2, 1000000));
    sharpness->add_option("--xtol", config.x_tol, "Bisection interval width on x")
        ->check(CLI::PositiveNumber);
    add_output_options(sharpness, config, format_name);

    double plot_p = 0.75;
    auto* plotdata = app.add_subcommand("plotdata", "Tabulate f, f1, f2 over r for plotting");
    plotdata->add_option("--p", plot_p, "Convex weight in [1/2, 1]")
        ->required()
        ->check(CLI::Range(0.5, 1.0));
    plotdata->add_option("--grid-points", config.grid_points, "Number of r samples")
        ->check(CLI::Range(2, 1000000));
    add_output_options(plotdata, config, format_name);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
    config.format = format_name == "json" ? OutputFormat::json : OutputFormat::csv;

    try {
        if (eval->parsed()) return cmd_eval(parse_mean_kind(kind_text), eval_a, eval_b, out);
        if (verify->parsed()) return cmd_verify(config, id_names, out, err);
        if (sharpness->parsed()) return cmd_sharpness(config, out, err);
        if (plotdata->parsed()) return cmd_plotdata(config, plot_p, out, err);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
    err << "error: no subcommand selected\n";
    return 2;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("meanbound");
    for (const std::string& arg : args) argv.push_back(arg.c_str());
    return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

} // namespace meanbound::cli
