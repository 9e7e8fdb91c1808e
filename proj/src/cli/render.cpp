#include "ancred/cli/render.hpp"

#include <charconv>
#include <cstdio>
#include <sstream>

#include "ancred/cli/csv.hpp"

namespace ancred::cli {

namespace {

using nlohmann::ordered_json;

ordered_json json_number_or_null(const std::optional<double>& value) {
    if (!value) return nullptr;
    return *value;
}

std::string format_optional(const std::optional<double>& value) {
    return value ? format_full(*value) : "";
}

const char* yes_no(bool flag) { return flag ? "yes" : "no"; }

}  // namespace

std::string format_full(double value) {
    char buffer[40];
    const auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof buffer, value);
    return std::string(buffer, ptr);
}

std::string format_sig4(double value) {
    char buffer[40];
    std::snprintf(buffer, sizeof buffer, "%.4g", value);
    return buffer;
}

nlohmann::ordered_json assessment_to_json(const StudyAssessment& assessment) {
    const CredibilityReport& r = assessment.report;
    ordered_json j;
    j["input"] = {{"id", assessment.record.id},
                  {"lower", assessment.record.lower},
                  {"upper", assessment.record.upper},
                  {"level", assessment.record.level},
                  {"scale", to_string(assessment.record.scale)}};
    j["estimate"] = assessment.estimate.estimate;
    j["std_error"] = assessment.estimate.std_error;
    j["p"] = r.p_value.value();
    j["t"] = r.t_statistic;
    j["box_stat_sq"] = json_number_or_null(r.box_statistic_sq);
    j["p_box"] = r.p_box ? ordered_json(r.p_box->value()) : ordered_json(nullptr);
    j["p_ic"] = r.p_ic.value();
    j["p_rep"] = r.p_rep.value();
    j["cred_ratio"] = json_number_or_null(r.credibility_ratio);
    j["alpha_ic"] = r.alpha_ic.value();
    j["significant"] = r.significant;
    j["intrinsically_credible_box"] = r.intrinsically_credible_box;
    j["intrinsically_credible_matthews"] = r.intrinsically_credible_matthews;
    j["verdict"] = to_string(assessment.verdict);
    return j;
}

std::string render_assessment_table(const StudyAssessment& assessment) {
    const CredibilityReport& r = assessment.report;
    std::ostringstream out;
    auto row = [&out](const char* name, const std::string& value) {
        out << name;
        for (std::size_t i = std::string(name).size(); i < 22; ++i) out << ' ';
        out << value << '\n';
    };
    if (!assessment.record.id.empty()) row("id", assessment.record.id);
    row("interval", "[" + format_sig4(assessment.record.lower) + ", " +
                        format_sig4(assessment.record.upper) + "] at level " +
                        format_sig4(assessment.record.level) + " (" +
                        to_string(assessment.record.scale) + " scale)");
    row("estimate (se)", format_sig4(assessment.estimate.estimate) + " (" +
                             format_sig4(assessment.estimate.std_error) + ")");
    row("p value", format_sig4(r.p_value));
    row("t statistic", format_sig4(r.t_statistic));
    row("conflict stat t2", r.box_statistic_sq ? format_sig4(*r.box_statistic_sq) : "-");
    row("p box", r.p_box ? format_sig4(*r.p_box) : "-");
    row("p intrinsic", format_sig4(r.p_ic));
    row("p replication", format_sig4(r.p_rep));
    row("credibility ratio", r.credibility_ratio ? format_sig4(*r.credibility_ratio) : "-");
    row("alpha_ic", format_sig4(r.alpha_ic));
    row("significant", yes_no(r.significant));
    row("credible (conflict)", yes_no(r.intrinsically_credible_box));
    row("credible (prior)", yes_no(r.intrinsically_credible_matthews));
    row("verdict", to_string(assessment.verdict));
    return out.str();
}

const char* const kReportCsvHeader =
    "id,lower,upper,level,scale,p,t,box_stat_sq,p_box,p_ic,p_rep,cred_ratio,"
    "alpha_ic,significant,verdict";

std::string assessment_csv_row(const StudyAssessment& assessment) {
    const CredibilityReport& r = assessment.report;
    std::ostringstream out;
    out << csv_escape(assessment.record.id) << ','
        << format_full(assessment.record.lower) << ','
        << format_full(assessment.record.upper) << ','
        << format_full(assessment.record.level) << ','
        << to_string(assessment.record.scale) << ','
        << format_full(r.p_value) << ','
        << format_full(r.t_statistic) << ','
        << format_optional(r.box_statistic_sq) << ','
        << (r.p_box ? format_full(*r.p_box) : "") << ','
        << format_full(r.p_ic) << ','
        << format_full(r.p_rep) << ','
        << format_optional(r.credibility_ratio) << ','
        << format_full(r.alpha_ic) << ','
        << (r.significant ? "true" : "false") << ','
        << to_string(assessment.verdict);
    return out.str();
}

nlohmann::ordered_json simulation_to_json(const SimulationConfig& config,
                                          const SimulationResult& result) {
    ordered_json j;
    j["first_estimate"] = config.first_estimate;
    j["std_error"] = config.std_error;
    j["num_draws"] = config.num_draws;
    j["seed"] = config.seed;
    j["flip_probability"] = result.flip_probability.value();
    j["monte_carlo_se"] = result.monte_carlo_se;
    j["closed_form"] = result.closed_form.value();
    j["p_rep"] = 1.0 - result.closed_form.value();
    return j;
}

std::string render_simulation_table(const SimulationConfig& config,
                                    const SimulationResult& result) {
    std::ostringstream out;
    auto row = [&out](const char* name, const std::string& value) {
        out << name;
        for (std::size_t i = std::string(name).size(); i < 22; ++i) out << ' ';
        out << value << '\n';
    };
    row("first estimate (se)", format_sig4(config.first_estimate) + " (" +
                                   format_sig4(config.std_error) + ")");
    row("draws", std::to_string(config.num_draws));
    row("seed", std::to_string(config.seed));
    row("flip probability", format_sig4(result.flip_probability));
    row("monte carlo se", format_sig4(result.monte_carlo_se));
    row("closed form", format_sig4(result.closed_form));
    row("p_rep (closed form)", format_sig4(1.0 - result.closed_form.value()));
    return out.str();
}

}  // namespace ancred::cli
