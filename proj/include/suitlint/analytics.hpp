#pragma once

#include <map>
#include <string>
#include <vector>

#include "suitlint/smells.hpp"
#include "suitlint/util.hpp"

namespace suitlint {

struct MismatchedAlphabetsError : Error {
    using Error::Error;
};
struct DegenerateInputError : Error {
    using Error::Error;
};

struct KneeResult {
    double quantile = 0.0;
    double threshold = 0.0;   // value of the quantile function at the knee
    double score = 0.0;       // normalized difference at the knee
    bool degenerate = false;  // all inputs equal; threshold is that value
};

// Knee of the quantile curve of `values` (kneedle difference-curve core,
// no smoothing). The quantile function is sampled on a fixed grid with
// step 0.001 and both axes are normalized to [0,1]; the returned grid
// point maximizes the normalized difference between the curve and the
// diagonal, with the difference oriented by the curve's convexity. A flat
// input yields quantile 1.0 with the common value and the degenerate flag.
// Requires at least 3 values.
KneeResult knee_point(std::vector<double> values);

// 1 - editDistance(a, b) / max(|a|, |b|), each id one symbol. The two
// rankings must be permutations of the same id set.
double rank_similarity(const std::vector<std::string>& a, const std::vector<std::string>& b);

// Plain Levenshtein distance over symbol sequences.
std::size_t edit_distance(const std::vector<std::string>& a, const std::vector<std::string>& b);

struct RankComparison {
    std::string statistic;  // which statistic ordered the rankings
    std::vector<std::string> ranking_a;
    std::vector<std::string> ranking_b;
    double similarity = 0.0;
};

struct Stats {
    long long n = 0;
    double mean = 0, min = 0, q1 = 0, median = 0, q3 = 0, max = 0;
};

Stats compute_stats(std::vector<double> values);

// One (version, test) analysis result feeding corpus statistics.
struct FindingRecord {
    std::string version;
    std::string test_key;
    SmellFinding finding;
};

struct DistributionSummary {
    SmellId smell = SmellId::AoC;
    long long tests_analyzed = 0;     // (version, test) instances
    long long tests_symptomatic = 0;  // instances with S >= 1
    double percent_symptomatic = 0;
    Stats count_stats;    // S over symptomatic instances
    Stats density_stats;  // D over instances with a defined density
};

// Count summaries are restricted to symptomatic tests; density summaries
// skip ABSENT densities.
std::vector<DistributionSummary> summarize(const std::vector<FindingRecord>& records);

// Smell codes ordered descending by the given per-smell statistic,
// ties broken by smell code.
std::vector<std::string> ranking_by(const std::map<SmellId, double>& statistic);

}  // namespace suitlint
