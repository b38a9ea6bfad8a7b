#pragma once

#include "stylediff/detector_config.hpp"
#include "stylediff/findings.hpp"

namespace stylediff {

/// Heuristic proxies for human quality judgments. All three are pure
/// functions of the two units and the config; swapping reference and
/// candidate maps ModelBetter to HumanBetter and back, and fixes Tie.

/// Composite of descriptive-identifier ratio, meaningful-comment density,
/// long-line penalty, and nesting-depth penalty. Higher wins; ties within
/// a band of tie_band_fraction times the larger magnitude.
VerdictDetail compare_readability(const CodePair& pair, const DetectorConfig& config);

/// Logical statement count plus single-use intermediate count. Lower wins;
/// exact ties only.
VerdictDetail compare_conciseness(const CodePair& pair, const DetectorConfig& config);

/// Count of input validations, runtime validations, and exception handlers.
/// Higher wins; exact ties only. The verdict always agrees with the sign of
/// the mechanism-count difference.
VerdictDetail compare_robustness(const CodePair& pair, const DetectorConfig& config);

}  // namespace stylediff
