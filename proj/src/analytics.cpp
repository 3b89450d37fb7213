#include "suitlint/analytics.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace suitlint {

namespace {

constexpr int kGridSteps = 1000;  // grid step 0.001

// Nearest-rank quantile over sorted values, so the result is always an
// attained element of the input.
double quantile_at(const std::vector<double>& sorted, double q) {
    if (q <= 0.0) return sorted.front();
    std::size_t rank = static_cast<std::size_t>(
        std::ceil(q * static_cast<double>(sorted.size())));
    if (rank < 1) rank = 1;
    if (rank > sorted.size()) rank = sorted.size();
    return sorted[rank - 1];
}

// Linear-interpolation quantile for descriptive statistics.
double interp_quantile(const std::vector<double>& sorted, double q) {
    if (sorted.empty()) return 0.0;
    if (sorted.size() == 1) return sorted[0];
    double idx = q * static_cast<double>(sorted.size() - 1);
    std::size_t lo = static_cast<std::size_t>(idx);
    if (lo >= sorted.size() - 1) return sorted.back();
    double frac = idx - static_cast<double>(lo);
    return sorted[lo] + frac * (sorted[lo + 1] - sorted[lo]);
}

}  // namespace

KneeResult knee_point(std::vector<double> values) {
    if (values.size() < 3)
        throw DegenerateInputError("knee_point requires at least 3 values");
    std::sort(values.begin(), values.end());

    const double vmin = values.front();
    const double vmax = values.back();
    if (vmin == vmax) return KneeResult{1.0, vmin, 0.0, true};

    std::vector<double> x(kGridSteps + 1), y(kGridSteps + 1);
    for (int i = 0; i <= kGridSteps; ++i) {
        double q = static_cast<double>(i) / kGridSteps;
        x[i] = q;
        y[i] = (quantile_at(values, q) - vmin) / (vmax - vmin);
    }

    // Orient the difference by the curve's side of the diagonal: a curve
    // below the chord (convex rise) has its knee where x - y peaks, one
    // above it where y - x peaks.
    double mean_y = 0;
    for (double v : y) mean_y += v;
    mean_y /= static_cast<double>(y.size());
    const bool convex = mean_y < 0.5;

    int best = 0;
    double best_diff = -1.0;
    for (int i = 0; i <= kGridSteps; ++i) {
        double d = convex ? x[i] - y[i] : y[i] - x[i];
        if (d > best_diff) {
            best_diff = d;
            best = i;
        }
    }
    double q = static_cast<double>(best) / kGridSteps;
    return KneeResult{q, quantile_at(values, q), best_diff, false};
}

std::size_t edit_distance(const std::vector<std::string>& a, const std::vector<std::string>& b) {
    const std::size_t n = a.size(), m = b.size();
    std::vector<std::size_t> row(m + 1);
    for (std::size_t j = 0; j <= m; ++j) row[j] = j;
    for (std::size_t i = 1; i <= n; ++i) {
        std::size_t corner = row[0];
        row[0] = i;
        for (std::size_t j = 1; j <= m; ++j) {
            std::size_t up = row[j];
            if (a[i - 1] == b[j - 1]) {
                row[j] = corner;
            } else {
                row[j] = 1 + std::min({corner, up, row[j - 1]});
            }
            corner = up;
        }
    }
    return row[m];
}

double rank_similarity(const std::vector<std::string>& a, const std::vector<std::string>& b) {
    std::multiset<std::string> sa(a.begin(), a.end());
    std::multiset<std::string> sb(b.begin(), b.end());
    if (sa != sb)
        throw MismatchedAlphabetsError("rankings are not permutations of the same id set");
    if (a.empty()) return 1.0;
    double dist = static_cast<double>(edit_distance(a, b));
    return 1.0 - dist / static_cast<double>(std::max(a.size(), b.size()));
}

Stats compute_stats(std::vector<double> values) {
    Stats s;
    s.n = static_cast<long long>(values.size());
    if (values.empty()) return s;
    std::sort(values.begin(), values.end());
    double sum = 0;
    for (double v : values) sum += v;
    s.mean = sum / static_cast<double>(values.size());
    s.min = values.front();
    s.max = values.back();
    s.q1 = interp_quantile(values, 0.25);
    s.median = interp_quantile(values, 0.5);
    s.q3 = interp_quantile(values, 0.75);
    return s;
}

std::vector<DistributionSummary> summarize(const std::vector<FindingRecord>& records) {
    std::map<SmellId, DistributionSummary> by_smell;
    std::map<SmellId, std::vector<double>> counts;
    std::map<SmellId, std::vector<double>> densities;

    for (SmellId id : all_smells()) {
        by_smell[id].smell = id;
    }
    for (const auto& r : records) {
        DistributionSummary& s = by_smell[r.finding.smell];
        ++s.tests_analyzed;
        if (r.finding.count >= 1) {
            ++s.tests_symptomatic;
            counts[r.finding.smell].push_back(static_cast<double>(r.finding.count));
        }
        if (!r.finding.density_absent())
            densities[r.finding.smell].push_back(r.finding.density());
    }

    std::vector<DistributionSummary> out;
    for (SmellId id : all_smells()) {
        DistributionSummary& s = by_smell[id];
        if (s.tests_analyzed > 0)
            s.percent_symptomatic = 100.0 * static_cast<double>(s.tests_symptomatic) /
                                    static_cast<double>(s.tests_analyzed);
        s.count_stats = compute_stats(counts[id]);
        s.density_stats = compute_stats(densities[id]);
        out.push_back(s);
    }
    return out;
}

std::vector<std::string> ranking_by(const std::map<SmellId, double>& statistic) {
    std::vector<std::pair<std::string, double>> items;
    for (SmellId id : all_smells()) {
        auto it = statistic.find(id);
        items.emplace_back(smell_code(id), it == statistic.end() ? 0.0 : it->second);
    }
    std::stable_sort(items.begin(), items.end(), [](const auto& a, const auto& b) {
        if (a.second != b.second) return a.second > b.second;
        return a.first < b.first;
    });
    std::vector<std::string> out;
    for (auto& [code, v] : items) out.push_back(code);
    return out;
}

}  // namespace suitlint
