#pragma once

#include <map>
#include <string>

#include "stylediff/detector_config.hpp"
#include "stylediff/findings.hpp"
#include "stylediff/stats.hpp"

namespace stylediff {

enum class ReportFormat : uint8_t { Json, Csv, PlotData };

std::optional<ReportFormat> report_format_from_name(const std::string& name);

/// Pipeline stage counts carried into the report for provenance.
using StageCounts = std::map<std::string, long long>;

/// Render corpus statistics as a self-contained document. All formats embed
/// the tool version and the detector-config digest; output is byte-identical
/// across runs on identical input.
std::string emit_report(const CorpusStats& stats, ReportFormat format,
                        const DetectorConfig& config,
                        const StageCounts& stage_counts = {});

/// Render one pair's findings and verdicts as JSON.
std::string render_pair_report(const PairReport& report,
                               const DetectorConfig& config);

}  // namespace stylediff
