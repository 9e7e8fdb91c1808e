#pragma once

// One study as it arrives from the command line or a CSV row, plus the
// verdict mapping the CLI layers on top of the core report.
//
// Ratio measures (odds/hazard ratios) enter on their natural scale with
// scale = log; the record is log-transformed before assessment and every
// reported quantity then lives on the log scale.

#include <optional>
#include <string>

#include "ancred/credibility.hpp"

namespace ancred::cli {

enum class Scale { identity, log };

enum class Verdict { not_significant, suggestive, intrinsically_credible };

struct StudyRecord {
    std::string id;
    double lower = 0.0;
    double upper = 0.0;
    double level = 0.95;
    Scale scale = Scale::identity;
};

// A record together with everything derived from it.  `interval` is the
// analysis-scale interval (log-transformed when scale = log).
struct StudyAssessment {
    StudyRecord record;
    SymmetricInterval interval;
    EffectEstimate estimate;
    CredibilityReport report;
    Verdict verdict = Verdict::not_significant;
};

const char* to_string(Scale scale);
const char* to_string(Verdict verdict);
std::optional<Scale> scale_from_string(const std::string& text);

// Reason the record cannot be assessed, or nullopt if it is well-formed.
std::optional<std::string> record_problem(const StudyRecord& record);

// Verdict from a core report.  The default band is the exact intrinsic
// threshold at the record's level; `headline` switches to the fixed
// 0.005 / 0.05 bands of the three-tier proposal.
Verdict classify(const CredibilityReport& report, bool headline = false);

// Assesses one record.  Throws std::invalid_argument with the
// record_problem reason when the record is malformed.
StudyAssessment assess_record(const StudyRecord& record, bool headline = false);

}  // namespace ancred::cli
