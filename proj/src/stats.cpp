#include "stylediff/stats.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>

#include "stylediff/errors.hpp"

namespace stylediff {

CorpusStats compute_stats(const std::vector<PairReport>& reports) {
    if (reports.empty()) throw EmptyInputError("no reports to aggregate");

    struct Accum {
        long long valid = 0;
        long long inconsistent = 0;
        std::map<int, long long> count_hist;       // k -> samples
        std::map<int, long long> type_counts;      // type -> samples
    };
    std::map<std::string, Accum> by_model;
    for (const PairReport& r : reports) {
        Accum& a = by_model[r.model];
        ++a.valid;
        if (r.inconsistent) {
            ++a.inconsistent;
            ++a.count_hist[static_cast<int>(r.distinct_types.size())];
        }
        for (int t : r.distinct_types) ++a.type_counts[t];
    }

    CorpusStats stats;
    for (const auto& [model, a] : by_model) {
        ModelRatio mr;
        mr.valid_count = a.valid;
        mr.inconsistent_count = a.inconsistent;
        mr.ratio = a.valid == 0 ? 0.0
                                : static_cast<double>(a.inconsistent) /
                                      static_cast<double>(a.valid);
        stats.per_model_ratio[model] = mr;

        if (a.inconsistent > 0) {
            for (const auto& [k, count] : a.count_hist)
                stats.count_histogram[model][k] =
                    static_cast<double>(count) / static_cast<double>(a.inconsistent);
        } else {
            stats.count_histogram[model] = {};
        }

        for (int t = 1; t <= kTypeCount; ++t) {
            auto it = a.type_counts.find(t);
            long long count = it == a.type_counts.end() ? 0 : it->second;
            stats.type_frequency[model][t] =
                a.valid == 0 ? 0.0
                             : static_cast<double>(count) / static_cast<double>(a.valid);
        }

        for (Dimension d : {Dimension::Formatting, Dimension::Semantic,
                            Dimension::ExpressionStatement, Dimension::ControlFlow,
                            Dimension::FaultTolerance}) {
            double sum = 0.0;
            for (int t : types_in_dimension(d)) sum += stats.type_frequency[model][t];
            stats.dimension_frequency[model][d] = sum;
        }
    }
    for (int t = 1; t <= kTypeCount; ++t) {
        double total = 0.0;
        for (const auto& [model, freqs] : stats.type_frequency)
            total += freqs.at(t);
        stats.stacked_type_total[t] = total;
    }
    return stats;
}

// ----------------------------------------------------------------- kappa ---

KappaResult cohen_kappa(const std::vector<int>& labels_a,
                        const std::vector<int>& labels_b) {
    if (labels_a.empty() || labels_a.size() != labels_b.size())
        throw EmptyInputError("kappa needs two equal-length nonempty label lists");
    double n = static_cast<double>(labels_a.size());
    std::unordered_map<int, long long> ca, cb;
    long long agree = 0;
    for (size_t i = 0; i < labels_a.size(); ++i) {
        ++ca[labels_a[i]];
        ++cb[labels_b[i]];
        if (labels_a[i] == labels_b[i]) ++agree;
    }
    double po = static_cast<double>(agree) / n;
    double pe = 0.0;
    for (const auto& [label, count_a] : ca) {
        auto it = cb.find(label);
        if (it == cb.end()) continue;
        pe += (static_cast<double>(count_a) / n) *
              (static_cast<double>(it->second) / n);
    }
    KappaResult result;
    if (pe >= 1.0) {
        result.value = 1.0;
        result.degenerate = true;
        return result;
    }
    result.value = (po - pe) / (1.0 - pe);
    return result;
}

KappaResult cohen_kappa(const std::vector<std::string>& labels_a,
                        const std::vector<std::string>& labels_b) {
    std::unordered_map<std::string, int> ids;
    auto to_int = [&](const std::vector<std::string>& labels) {
        std::vector<int> out;
        out.reserve(labels.size());
        for (const std::string& l : labels) {
            auto [it, inserted] = ids.emplace(l, static_cast<int>(ids.size()));
            out.push_back(it->second);
        }
        return out;
    };
    std::vector<int> a = to_int(labels_a);
    std::vector<int> b = to_int(labels_b);
    return cohen_kappa(a, b);
}

// ---------------------------------------------------------------- g-test ---

namespace {

constexpr double kGammaEps = 1e-14;
constexpr int kGammaMaxIter = 500;

// Regularized lower incomplete gamma by series expansion (x < a+1).
double gamma_p_series(double a, double x) {
    double ap = a;
    double sum = 1.0 / a;
    double del = sum;
    for (int i = 0; i < kGammaMaxIter; ++i) {
        ap += 1.0;
        del *= x / ap;
        sum += del;
        if (std::fabs(del) < std::fabs(sum) * kGammaEps) break;
    }
    return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

// Regularized upper incomplete gamma by Lentz continued fraction (x >= a+1).
double gamma_q_cf(double a, double x) {
    const double tiny = 1e-300;
    double b = x + 1.0 - a;
    double c = 1.0 / tiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i <= kGammaMaxIter; ++i) {
        double an = -static_cast<double>(i) * (static_cast<double>(i) - a);
        b += 2.0;
        d = an * d + b;
        if (std::fabs(d) < tiny) d = tiny;
        c = b + an / c;
        if (std::fabs(c) < tiny) c = tiny;
        d = 1.0 / d;
        double del = d * c;
        h *= del;
        if (std::fabs(del - 1.0) < kGammaEps) break;
    }
    return std::exp(-x + a * std::log(x) - std::lgamma(a)) * h;
}

double gamma_q(double a, double x) {
    if (x < 0.0 || a <= 0.0) return 1.0;
    if (x == 0.0) return 1.0;
    if (x < a + 1.0) return 1.0 - gamma_p_series(a, x);
    return gamma_q_cf(a, x);
}

}  // namespace

double chi_square_upper_tail(double x, int degrees_of_freedom) {
    if (x <= 0.0) return 1.0;
    double p = gamma_q(degrees_of_freedom / 2.0, x / 2.0);
    return std::clamp(p, 0.0, 1.0);
}

GTestResult g_test(const std::vector<std::vector<double>>& counts,
                   bool williams_correction) {
    size_t rows = counts.size();
    if (rows < 2) throw EmptyInputError("g-test needs at least a 2x2 table");
    size_t cols = counts[0].size();
    if (cols < 2) throw EmptyInputError("g-test needs at least a 2x2 table");
    for (const auto& row : counts)
        if (row.size() != cols)
            throw EmptyInputError("g-test table rows have unequal lengths");

    std::vector<double> row_sum(rows, 0.0), col_sum(cols, 0.0);
    double total = 0.0;
    for (size_t i = 0; i < rows; ++i) {
        for (size_t j = 0; j < cols; ++j) {
            double o = counts[i][j];
            if (o < 0.0) throw DegenerateTableError("negative count in table");
            row_sum[i] += o;
            col_sum[j] += o;
            total += o;
        }
    }
    for (double s : row_sum)
        if (s <= 0.0) throw DegenerateTableError("all-zero row in table");
    for (double s : col_sum)
        if (s <= 0.0) throw DegenerateTableError("all-zero column in table");

    double g = 0.0;
    for (size_t i = 0; i < rows; ++i) {
        for (size_t j = 0; j < cols; ++j) {
            double o = counts[i][j];
            if (o <= 0.0) continue;
            double e = row_sum[i] * col_sum[j] / total;
            g += o * std::log(o / e);
        }
    }
    g *= 2.0;
    if (g < 0.0 && g > -1e-12) g = 0.0;  // guard tiny negative round-off

    GTestResult result;
    result.degrees_of_freedom =
        static_cast<int>((rows - 1) * (cols - 1));
    if (williams_correction) {
        double ri = 0.0, cj = 0.0;
        for (double s : row_sum) ri += total / s;
        for (double s : col_sum) cj += total / s;
        double q = 1.0 + (ri - 1.0) * (cj - 1.0) /
                             (6.0 * total *
                              static_cast<double>(result.degrees_of_freedom));
        g /= q;
    }
    result.g = g;
    result.p = chi_square_upper_tail(g, result.degrees_of_freedom);
    return result;
}

}  // namespace stylediff
