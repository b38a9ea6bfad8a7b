#pragma once

#include <vector>

#include "stylediff/detector_config.hpp"
#include "stylediff/findings.hpp"

namespace stylediff {

/// Run all five dimension detectors and the quality metrics on one pair.
/// Pairs whose canonical forms are equal yield zero findings. Findings are
/// ordered by (type id, candidate span, reference span, rule note).
PairReport detect_all(const CodePair& pair, const DetectorConfig& config);

// Dimension detectors. Each emits only findings of its own dimension.
std::vector<Finding> detect_formatting(const CodePair& pair,
                                       const DetectorConfig& config);  // 1-6
std::vector<Finding> detect_semantic(const CodePair& pair,
                                     const DetectorConfig& config);  // 7-8
std::vector<Finding> detect_expression(const CodePair& pair,
                                       const DetectorConfig& config);  // 9-15
std::vector<Finding> detect_control_flow(const CodePair& pair,
                                         const DetectorConfig& config);  // 16-18
std::vector<Finding> detect_fault_tolerance(const CodePair& pair,
                                            const DetectorConfig& config);  // 19-24

}  // namespace stylediff
