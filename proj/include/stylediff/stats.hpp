#pragma once

#include <map>
#include <string>
#include <vector>

#include "stylediff/findings.hpp"
#include "stylediff/taxonomy.hpp"

namespace stylediff {

struct ModelRatio {
    long long valid_count = 0;
    long long inconsistent_count = 0;
    double ratio = 0.0;  // inconsistent / valid
};

struct CorpusStats {
    std::map<std::string, ModelRatio> per_model_ratio;
    // model -> distinct-type count k (1..24) -> fraction of inconsistent samples
    std::map<std::string, std::map<int, double>> count_histogram;
    // model -> type id -> fraction of valid samples exhibiting the type
    std::map<std::string, std::map<int, double>> type_frequency;
    // model -> dimension -> sum of member type frequencies
    std::map<std::string, std::map<Dimension, double>> dimension_frequency;
    // type id -> sum of type_frequency over models (may exceed 1)
    std::map<int, double> stacked_type_total;
};

/// Aggregate pair reports into the corpus-level distributions. A sample
/// "exhibits" a type at most once regardless of how many findings of that
/// type it carries. Throws EmptyInputError on an empty input.
CorpusStats compute_stats(const std::vector<PairReport>& reports);

struct KappaResult {
    double value = 0.0;
    // Both annotators constant and identical: chance agreement is 1, the
    // coefficient is returned as 1 by convention and flagged here.
    bool degenerate = false;
};

/// Cohen's kappa over two equal-length label lists.
/// Throws EmptyInputError on empty or unequal-length inputs.
KappaResult cohen_kappa(const std::vector<std::string>& labels_a,
                        const std::vector<std::string>& labels_b);
KappaResult cohen_kappa(const std::vector<int>& labels_a,
                        const std::vector<int>& labels_b);

struct GTestResult {
    double g = 0.0;
    double p = 1.0;
    int degrees_of_freedom = 0;
};

/// Log-likelihood-ratio test of independence on a contingency table of
/// nonnegative counts (at least 2x2, no all-zero row or column). Throws
/// DegenerateTableError / EmptyInputError.
GTestResult g_test(const std::vector<std::vector<double>>& counts,
                   bool williams_correction = false);

/// Upper-tail probability of the chi-square distribution, via the
/// regularized upper incomplete gamma function (relative tolerance 1e-10).
double chi_square_upper_tail(double x, int degrees_of_freedom);

}  // namespace stylediff
