#include "ancred/cli/study.hpp"

#include <cmath>

namespace ancred::cli {

const char* to_string(Scale scale) {
    return scale == Scale::log ? "log" : "identity";
}

const char* to_string(Verdict verdict) {
    switch (verdict) {
        case Verdict::not_significant: return "not_significant";
        case Verdict::suggestive: return "suggestive";
        case Verdict::intrinsically_credible: return "intrinsically_credible";
    }
    return "not_significant";
}

std::optional<Scale> scale_from_string(const std::string& text) {
    if (text == "identity") return Scale::identity;
    if (text == "log") return Scale::log;
    return std::nullopt;
}

std::optional<std::string> record_problem(const StudyRecord& record) {
    if (!std::isfinite(record.lower) || !std::isfinite(record.upper))
        return "interval limits must be finite";
    if (!(record.lower < record.upper))
        return "invalid interval: requires lower < upper";
    if (!(record.level > 0.0 && record.level < 1.0))
        return "level must lie strictly in (0, 1)";
    if (record.scale == Scale::log && !(record.lower > 0.0))
        return "log scale requires positive interval limits";
    return std::nullopt;
}

Verdict classify(const CredibilityReport& report, bool headline) {
    if (headline) {
        // Fixed three-tier bands; a credible verdict still requires
        // significance at the record's own level.
        if (report.p_value < 0.005 && report.significant)
            return Verdict::intrinsically_credible;
        if (report.p_value < 0.05) return Verdict::suggestive;
        return Verdict::not_significant;
    }
    if (!report.significant) return Verdict::not_significant;
    return report.intrinsically_credible_box ? Verdict::intrinsically_credible
                                             : Verdict::suggestive;
}

StudyAssessment assess_record(const StudyRecord& record, bool headline) {
    if (auto problem = record_problem(record))
        throw std::invalid_argument(*problem);

    StudyAssessment out;
    out.record = record;
    out.interval = record.scale == Scale::log
                       ? SymmetricInterval{std::log(record.lower), std::log(record.upper), record.level}
                       : SymmetricInterval{record.lower, record.upper, record.level};
    out.estimate = interval_to_estimate(out.interval);
    out.report = assess(out.interval);
    out.verdict = classify(out.report, headline);
    return out;
}

}  // namespace ancred::cli
