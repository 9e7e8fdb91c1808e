#pragma once

// Output rendering.  Tables round to 4 significant figures for reading;
// CSV and JSON carry full precision (shortest round-trip form) so that
// presentation never feeds back into computation.

#include <string>

#include <json.hpp>

#include "ancred/cli/study.hpp"
#include "ancred/replication.hpp"

namespace ancred::cli {

// Shortest decimal form that parses back to the same double.
std::string format_full(double value);
// 4 significant figures, for tables.
std::string format_sig4(double value);

nlohmann::ordered_json assessment_to_json(const StudyAssessment& assessment);
std::string render_assessment_table(const StudyAssessment& assessment);

// Batch/assess CSV schema: the input echo followed by the report fields.
extern const char* const kReportCsvHeader;
std::string assessment_csv_row(const StudyAssessment& assessment);

nlohmann::ordered_json simulation_to_json(const SimulationConfig& config,
                                          const SimulationResult& result);
std::string render_simulation_table(const SimulationConfig& config,
                                    const SimulationResult& result);

}  // namespace ancred::cli
