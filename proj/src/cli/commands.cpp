#include "ancred/cli/commands.hpp"

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "ancred/cli/csv.hpp"
#include "ancred/cli/render.hpp"
#include "ancred/credibility.hpp"
#include "ancred/replication.hpp"

namespace ancred::cli {

namespace {

// Problems with how the tool was invoked, as opposed to problems with the
// data; mapped to exit code 2.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void require_level(double level) {
    if (!(level > 0.0 && level < 1.0))
        throw UsageError("--level must lie strictly in (0, 1)");
}

void require_alpha(double alpha) {
    if (!(alpha > 0.0 && alpha < 1.0))
        throw UsageError("alpha must lie strictly in (0, 1)");
}

// Opens --output when given, otherwise hands back stdout.  Binary mode so
// the emitted bytes are identical on every platform.
class OutputTarget {
public:
    explicit OutputTarget(const std::string& path) {
        if (!path.empty()) {
            file_.open(path, std::ios::binary);
            if (!file_) throw std::runtime_error("cannot open output file: " + path);
        }
    }
    std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

private:
    std::ofstream file_;
};

std::string format_grid_value(double value) {
    char buffer[40];
    std::snprintf(buffer, sizeof buffer, "%.12g", value);
    return buffer;
}

struct AssessOptions {
    double lower = 0.0, upper = 0.0, estimate = 0.0, se = 0.0;
    CLI::Option* lower_opt = nullptr;
    CLI::Option* upper_opt = nullptr;
    CLI::Option* estimate_opt = nullptr;
    CLI::Option* se_opt = nullptr;
    double level = 0.95;
    std::string scale = "identity";
    std::string format = "table";
    std::string output;
    bool headline = false;
    std::string id;
};

// Resolves the interval-or-estimate input contract shared by assess and
// simulate.  Returns the study record to assess.
StudyRecord resolve_study_input(const AssessOptions& opt) {
    const bool has_lower = opt.lower_opt->count() > 0;
    const bool has_upper = opt.upper_opt->count() > 0;
    const bool has_estimate = opt.estimate_opt->count() > 0;
    const bool has_se = opt.se_opt->count() > 0;
    if (has_lower != has_upper)
        throw UsageError("--lower and --upper must be given together");
    if (has_estimate != has_se)
        throw UsageError("--estimate and --se must be given together");
    if (has_lower == has_estimate)
        throw UsageError("provide exactly one of --lower/--upper or --estimate/--se");
    require_level(opt.level);

    StudyRecord record;
    record.id = opt.id;
    record.level = opt.level;
    if (has_lower) {
        record.lower = opt.lower;
        record.upper = opt.upper;
        record.scale = opt.scale == "log" ? Scale::log : Scale::identity;
    } else {
        if (opt.scale == "log")
            throw UsageError("log scale applies to interval limits; provide --lower/--upper");
        if (!(opt.se > 0.0))
            throw UsageError("--se must be > 0");
        const SymmetricInterval ci =
            estimate_to_interval({opt.estimate, opt.se}, opt.level);
        record.lower = ci.lower;
        record.upper = ci.upper;
    }
    return record;
}

int run_assess(const AssessOptions& opt) {
    const StudyRecord record = resolve_study_input(opt);
    const StudyAssessment assessment = assess_record(record, opt.headline);
    OutputTarget target(opt.output);
    if (opt.format == "json")
        target.stream() << assessment_to_json(assessment).dump(2) << '\n';
    else if (opt.format == "csv")
        target.stream() << kReportCsvHeader << '\n'
                        << assessment_csv_row(assessment) << '\n';
    else
        target.stream() << render_assessment_table(assessment);
    return 0;
}

struct BatchOptions {
    std::string input;
    std::string output;
    std::string rejects;
    std::string format = "csv";
    double level = 0.95;
    CLI::Option* level_opt = nullptr;
    bool headline = false;
};

int run_batch(const BatchOptions& opt) {
    std::ifstream in(opt.input);
    if (!in) {
        std::cerr << "error: cannot open input file: " << opt.input << '\n';
        return 1;
    }
    if (opt.level_opt->count() > 0) require_level(opt.level);

    ParsedBatch batch;
    try {
        batch = parse_study_csv(in);
    } catch (const BadHeaderError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    if (opt.level_opt->count() > 0)
        for (StudyRecord& record : batch.records) record.level = opt.level;

    if (opt.format == "table")
        throw UsageError("batch output supports --format csv or json");

    OutputTarget target(opt.output);
    std::ostream& out = target.stream();
    if (opt.format == "json") {
        nlohmann::ordered_json rows = nlohmann::ordered_json::array();
        for (const StudyRecord& record : batch.records)
            rows.push_back(assessment_to_json(assess_record(record, opt.headline)));
        out << rows.dump(2) << '\n';
    } else {
        out << kReportCsvHeader << '\n';
        for (const StudyRecord& record : batch.records)
            out << assessment_csv_row(assess_record(record, opt.headline)) << '\n';
    }

    if (!batch.rejects.empty()) {
        std::ofstream reject_file;
        std::ostream* reject_out = &std::cerr;
        if (!opt.rejects.empty()) {
            reject_file.open(opt.rejects, std::ios::binary);
            if (!reject_file) {
                std::cerr << "error: cannot open rejects file: " << opt.rejects << '\n';
                return 1;
            }
            reject_out = &reject_file;
        }
        for (const BatchReject& reject : batch.rejects)
            *reject_out << "line " << reject.line << ": " << reject.reason << '\n';
    }
    return 0;
}

struct ThresholdOptions {
    double alpha = 0.0, gamma = 0.0;
    CLI::Option* alpha_opt = nullptr;
    CLI::Option* gamma_opt = nullptr;
    std::string format = "table";
    std::string output;
};

int run_threshold(const ThresholdOptions& opt) {
    const bool has_alpha = opt.alpha_opt->count() > 0;
    const bool has_gamma = opt.gamma_opt->count() > 0;
    if (has_alpha == has_gamma)
        throw UsageError("provide exactly one of --alpha or --gamma");
    if (has_gamma) require_level(opt.gamma);
    const double alpha = has_alpha ? opt.alpha : 1.0 - opt.gamma;
    require_alpha(alpha);

    const double box = intrinsic_credibility_threshold(alpha);
    const double prior_based = matthews_threshold(alpha);
    OutputTarget target(opt.output);
    std::ostream& out = target.stream();
    if (opt.format == "json") {
        nlohmann::ordered_json j{{"alpha", alpha},
                                 {"alpha_ic", box},
                                 {"matthews_threshold", prior_based}};
        out << j.dump(2) << '\n';
    } else if (opt.format == "csv") {
        out << "alpha,alpha_ic,matthews_threshold\n"
            << format_full(alpha) << ',' << format_full(box) << ','
            << format_full(prior_based) << '\n';
    } else {
        out << "alpha                 " << format_sig4(alpha) << '\n'
            << "alpha_ic              " << format_sig4(box) << '\n'
            << "matthews threshold    " << format_sig4(prior_based) << '\n';
    }
    return 0;
}

struct CurveOptions {
    std::string kind;
    double min = 0.0, max = 0.0, step = 0.0;
    CLI::Option* min_opt = nullptr;
    CLI::Option* max_opt = nullptr;
    CLI::Option* step_opt = nullptr;
    std::string output;
};

int run_curve(const CurveOptions& opt) {
    double min = opt.min, max = opt.max, step = opt.step;
    if (opt.min_opt->count() == 0) min = opt.kind == "thresholds" ? 0.001 : 0.0001;
    if (opt.max_opt->count() == 0) max = opt.kind == "thresholds" ? 0.1 : 0.1;
    if (opt.step_opt->count() == 0) step = opt.kind == "thresholds" ? 0.001 : 0.0001;
    if (!(min > 0.0 && max < 1.0 && min <= max))
        throw UsageError("curve range must satisfy 0 < min <= max < 1");
    if (!(step > 0.0)) throw UsageError("--step must be > 0");

    OutputTarget target(opt.output);
    std::ostream& out = target.stream();
    const bool thresholds = opt.kind == "thresholds";
    out << (thresholds ? "alpha,box_threshold,matthews_threshold" : "p,p_ic") << '\n';
    for (std::uint64_t i = 0;; ++i) {
        const double x = min + static_cast<double>(i) * step;
        if (x > max + step * 1e-9) break;
        if (thresholds) {
            out << format_grid_value(x) << ','
                << format_grid_value(intrinsic_credibility_threshold(x)) << ','
                << format_grid_value(matthews_threshold(x)) << '\n';
        } else {
            out << format_grid_value(x) << ','
                << format_grid_value(p_intrinsic(x)) << '\n';
        }
    }
    return 0;
}

struct SimulateOptions {
    AssessOptions study;
    std::uint64_t draws = 1'000'000;
    std::uint64_t seed = 42;
};

int run_simulate(const SimulateOptions& opt) {
    const StudyRecord record = resolve_study_input(opt.study);
    const StudyAssessment assessment = assess_record(record);

    SimulationConfig config;
    config.first_estimate = assessment.estimate.estimate;
    config.std_error = assessment.estimate.std_error;
    config.num_draws = opt.draws;
    config.seed = opt.seed;
    const SimulationResult result = simulate_replication(config);

    OutputTarget target(opt.study.output);
    if (opt.study.format == "json")
        target.stream() << simulation_to_json(config, result).dump(2) << '\n';
    else
        target.stream() << render_simulation_table(config, result);
    return 0;
}

void add_study_options(CLI::App* cmd, AssessOptions& opt, bool with_scale) {
    opt.lower_opt = cmd->add_option("--lower", opt.lower, "Lower confidence limit");
    opt.upper_opt = cmd->add_option("--upper", opt.upper, "Upper confidence limit");
    opt.estimate_opt = cmd->add_option("--estimate", opt.estimate, "Point estimate");
    opt.se_opt = cmd->add_option("--se", opt.se, "Standard error of the estimate");
    cmd->add_option("--level", opt.level, "Confidence level of the interval")
        ->capture_default_str();
    if (with_scale)
        cmd->add_option("--scale", opt.scale,
                        "Scale of the interval limits; log transforms ratio "
                        "measures before assessment")
            ->check(CLI::IsMember({"identity", "log"}))
            ->capture_default_str();
    cmd->add_option("--output", opt.output, "Write output to a file instead of stdout");
}

}  // namespace

int run(int argc, const char* const* argv) {
    CLI::App app{
        "Credibility assessment for significant findings: derives the "
        "sceptical prior a result can just survive, checks it against the "
        "data, and reports intrinsic-credibility measures"};
    app.set_version_flag("--version", "0.1.0");
    app.require_subcommand(1);
    app.footer(
        "The suggestive verdict generalizes the conventional 0.05 / 0.0056 "
        "band to the requested level; pass --headline for the fixed "
        "0.05 / 0.005 bands.");

    AssessOptions assess_opt;
    CLI::App* assess_cmd =
        app.add_subcommand("assess", "Assess a single interval or estimate");
    add_study_options(assess_cmd, assess_opt, /*with_scale=*/true);
    assess_cmd->add_option("--id", assess_opt.id, "Label echoed in the output");
    assess_cmd->add_option("--format", assess_opt.format, "Output format")
        ->check(CLI::IsMember({"table", "json", "csv"}))
        ->capture_default_str();
    assess_cmd->add_flag("--headline", assess_opt.headline,
                         "Use the fixed 0.05 / 0.005 verdict bands");

    BatchOptions batch_opt;
    CLI::App* batch_cmd =
        app.add_subcommand("batch", "Assess every row of a CSV file");
    batch_cmd->add_option("input", batch_opt.input, "Input CSV with header id,lower,upper[,level][,scale]")
        ->required();
    batch_opt.level_opt =
        batch_cmd->add_option("--level", batch_opt.level,
                              "Override the confidence level of every row");
    batch_cmd->add_option("--output", batch_opt.output,
                          "Write output to a file instead of stdout");
    batch_cmd->add_option("--rejects", batch_opt.rejects,
                          "Write the rejected-row listing to a file instead of stderr");
    batch_cmd->add_option("--format", batch_opt.format, "Output format (csv or json)")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    batch_cmd->add_flag("--headline", batch_opt.headline,
                        "Use the fixed 0.05 / 0.005 verdict bands");

    ThresholdOptions threshold_opt;
    CLI::App* threshold_cmd = app.add_subcommand(
        "threshold", "Print the intrinsic-credibility p-value threshold");
    threshold_opt.alpha_opt =
        threshold_cmd->add_option("--alpha", threshold_opt.alpha, "Significance level");
    threshold_opt.gamma_opt =
        threshold_cmd->add_option("--gamma", threshold_opt.gamma, "Confidence level (1 - alpha)");
    threshold_cmd->add_option("--format", threshold_opt.format, "Output format")
        ->check(CLI::IsMember({"table", "json", "csv"}))
        ->capture_default_str();
    threshold_cmd->add_option("--output", threshold_opt.output,
                              "Write output to a file instead of stdout");

    CurveOptions curve_opt;
    CLI::App* curve_cmd = app.add_subcommand(
        "curve", "Emit a plot-ready CSV curve (thresholds or p_ic)");
    curve_cmd->add_option("kind", curve_opt.kind, "Which curve to emit")
        ->required()
        ->check(CLI::IsMember({"thresholds", "p_ic"}));
    curve_opt.min_opt = curve_cmd->add_option("--min", curve_opt.min, "Grid start");
    curve_opt.max_opt = curve_cmd->add_option("--max", curve_opt.max, "Grid end");
    curve_opt.step_opt = curve_cmd->add_option("--step", curve_opt.step, "Grid step");
    curve_cmd->add_option("--output", curve_opt.output,
                          "Write output to a file instead of stdout");

    SimulateOptions simulate_opt;
    CLI::App* simulate_cmd = app.add_subcommand(
        "simulate", "Monte Carlo check of the replication probability");
    add_study_options(simulate_cmd, simulate_opt.study, /*with_scale=*/false);
    simulate_cmd->add_option("-n,--draws", simulate_opt.draws, "Number of simulated replications")
        ->capture_default_str();
    simulate_cmd->add_option("--seed", simulate_opt.seed, "Random seed")
        ->capture_default_str();
    simulate_cmd->add_option("--format", simulate_opt.study.format, "Output format")
        ->check(CLI::IsMember({"table", "json"}))
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (assess_cmd->parsed()) return run_assess(assess_opt);
        if (batch_cmd->parsed()) return run_batch(batch_opt);
        if (threshold_cmd->parsed()) return run_threshold(threshold_opt);
        if (curve_cmd->parsed()) return run_curve(curve_opt);
        if (simulate_cmd->parsed()) return run_simulate(simulate_opt);
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}

}  // namespace ancred::cli
