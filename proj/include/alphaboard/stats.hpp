#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "alphaboard/search.hpp"

namespace alphaboard {

struct DegenerateSample : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct BadBins : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct BatchResult {
  std::vector<RunRecord> records;  // replication-index order
  std::string fingerprint;
  std::uint64_t censored = 0;
};

struct SampleSet {
  std::vector<double> costs;  // uncensored C values, replication order
  std::string fingerprint;
  std::uint64_t censored = 0;
};

// reps independent replications; replication i runs with seed
// substream_seed(master_seed, i), so the result is identical for any worker
// count and for any execution order.
BatchResult batch(const Puzzle& puzzle, const HintCatalog& catalog, const SearchConfig& config,
                  std::uint64_t reps, std::uint64_t master_seed, unsigned workers = 0);

SampleSet sample_set(const BatchResult& result);

double sample_mean(std::span<const double> xs);
double sample_stderr(std::span<const double> xs);  // sample sd / sqrt(n)

struct FitResult {
  double lambda_hat = 0.0;  // exponential MLE scale = sample mean
  double stderr_ = 0.0;     // lambda_hat / sqrt(n)
  double ks_statistic = 0.0;
  double mean = 0.0;
  double variance = 0.0;
  std::size_t n = 0;
};

// MLE fit of an exponential scale plus the KS distance between the empirical
// CDF and the fitted law. Throws DegenerateSample for n < 2 or an all-zero
// sample.
FitResult fit_exponential(const SampleSet& samples);

// sup_x |F_n(x) - cdf(x)| over the sample points.
double ks_statistic(std::vector<double> samples, const std::function<double(double)>& cdf);

struct HistogramBin {
  double center = 0.0;
  double density = 0.0;
};

struct HistogramOptions {
  int bin_count = 50;          // used when bin_width <= 0
  double bin_width = 0.0;
  double upper_quantile = 0.995;  // range cap when bin_count is used
};

// Density table normalized so that sum(density * width) = 1 over the kept
// samples (samples beyond the ranged top edge are dropped).
std::vector<HistogramBin> histogram(std::span<const double> samples, const HistogramOptions& opts);
double histogram_bin_width(std::span<const double> samples, const HistogramOptions& opts);

struct SweepRow {
  Heuristic heuristic = Heuristic::standard;
  std::uint32_t agents = 0;
  std::uint64_t reps = 0;
  double mean_cost = 0.0;
  double stderr_ = 0.0;
  std::uint64_t censored = 0;
};

// One batch per system size; row i uses master seed substream_seed(seed, i).
std::vector<SweepRow> sweep(const Puzzle& puzzle, const HintCatalog& catalog,
                            const SearchConfig& base, std::span<const std::uint32_t> agent_counts,
                            std::uint64_t reps, std::uint64_t master_seed, unsigned workers = 0);

struct BoardFillStat {
  std::uint32_t agents = 0;
  std::uint64_t reps = 0;
  double mean_size = 0.0;
  double stderr_ = 0.0;
};

// Mean number of distinct hints on the board right after initialization.
BoardFillStat board_fill_stat(const Puzzle& puzzle, const HintCatalog& catalog,
                              std::uint32_t agents, std::uint64_t reps, std::uint64_t master_seed,
                              unsigned workers = 0);

struct ReferencePoint {
  double c = 0.0;
  double exponential_density = 0.0;  // exp(-c/lambda)/lambda with lambda = 1
  double exponential_cdf = 0.0;
  double geometric_cdf = 0.0;        // exact first-passage law on the unit grid
};

// Analytic baselines of the independent search, in computational-cost units,
// for overlaying on measured histograms. Requires M*p <= 1.
std::vector<ReferencePoint> reference_curves(std::uint32_t agents, double p,
                                             std::span<const double> c_grid);

double exponential_density(double c, double lambda = 1.0);

}  // namespace alphaboard
