#include "alphaboard/stats.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

namespace alphaboard {

namespace {

unsigned resolve_workers(unsigned requested, std::uint64_t jobs) {
  unsigned w = requested > 0 ? requested : std::max(1u, std::thread::hardware_concurrency());
  return static_cast<unsigned>(std::min<std::uint64_t>(w, jobs));
}

std::string make_fingerprint(const Puzzle& puzzle, const SearchConfig& config, std::uint64_t reps,
                             std::uint64_t master_seed) {
  return render_puzzle(puzzle) + "|" + heuristic_name(config.heuristic) +
         "|M=" + std::to_string(config.agents) +
         "|hints=" + (config.hint_mode == HintMode::extended ? "extended" : "no-carry") +
         "|seed=" + std::to_string(master_seed) + "|reps=" + std::to_string(reps);
}

}  // namespace

BatchResult batch(const Puzzle& puzzle, const HintCatalog& catalog, const SearchConfig& config,
                  std::uint64_t reps, std::uint64_t master_seed, unsigned workers) {
  BatchResult result;
  result.fingerprint = make_fingerprint(puzzle, config, reps, master_seed);
  result.records.resize(reps);

  unsigned w = resolve_workers(workers, reps);
  auto work = [&](unsigned worker) {
    SearchConfig local = config;
    for (std::uint64_t i = worker; i < reps; i += w) {
      local.seed = substream_seed(master_seed, i);
      result.records[i] = run(puzzle, catalog, local);
    }
  };
  if (w <= 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(w);
    for (unsigned t = 0; t < w; ++t) pool.emplace_back(work, t);
    for (auto& th : pool) th.join();
  }
  for (const RunRecord& r : result.records)
    if (r.censored) ++result.censored;
  return result;
}

SampleSet sample_set(const BatchResult& result) {
  SampleSet s;
  s.fingerprint = result.fingerprint;
  s.censored = result.censored;
  s.costs.reserve(result.records.size());
  for (const RunRecord& r : result.records)
    if (!r.censored) s.costs.push_back(r.cost.value());
  return s;
}

double sample_mean(std::span<const double> xs) {
  double sum = 0.0;
  for (double x : xs) sum += x;
  return sum / static_cast<double>(xs.size());
}

double sample_stderr(std::span<const double> xs) {
  double mean = sample_mean(xs);
  double ss = 0.0;
  for (double x : xs) ss += (x - mean) * (x - mean);
  double var = ss / static_cast<double>(xs.size() - 1);
  return std::sqrt(var / static_cast<double>(xs.size()));
}

double ks_statistic(std::vector<double> samples, const std::function<double(double)>& cdf) {
  std::sort(samples.begin(), samples.end());
  double n = static_cast<double>(samples.size());
  double worst = 0.0;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    double f = cdf(samples[i]);
    double lo = f - static_cast<double>(i) / n;
    double hi = (static_cast<double>(i) + 1.0) / n - f;
    worst = std::max({worst, lo, hi});
  }
  return worst;
}

FitResult fit_exponential(const SampleSet& samples) {
  const auto& xs = samples.costs;
  if (xs.size() < 2) throw DegenerateSample("need at least 2 uncensored samples");
  FitResult fit;
  fit.n = xs.size();
  fit.mean = sample_mean(xs);
  if (fit.mean <= 0.0) throw DegenerateSample("all samples are zero");
  double ss = 0.0;
  for (double x : xs) ss += (x - fit.mean) * (x - fit.mean);
  fit.variance = ss / static_cast<double>(xs.size() - 1);
  fit.lambda_hat = fit.mean;
  fit.stderr_ = fit.lambda_hat / std::sqrt(static_cast<double>(fit.n));
  double lambda = fit.lambda_hat;
  fit.ks_statistic =
      ks_statistic(xs, [lambda](double x) { return -std::expm1(-x / lambda); });
  return fit;
}

double histogram_bin_width(std::span<const double> samples, const HistogramOptions& opts) {
  if (opts.bin_width > 0.0) return opts.bin_width;
  if (opts.bin_count <= 0) throw BadBins("bin count must be positive");
  std::vector<double> sorted(samples.begin(), samples.end());
  std::sort(sorted.begin(), sorted.end());
  auto idx = static_cast<std::size_t>(opts.upper_quantile * (static_cast<double>(sorted.size()) - 1.0));
  double hi = sorted[idx];
  if (hi <= 0.0) hi = sorted.back();
  if (hi <= 0.0) hi = 1.0;  // all-zero sample: arbitrary unit range
  return hi / static_cast<double>(opts.bin_count);
}

std::vector<HistogramBin> histogram(std::span<const double> samples,
                                    const HistogramOptions& opts) {
  if (samples.empty()) throw BadBins("empty sample");
  if (opts.bin_width <= 0.0 && opts.bin_count <= 0) throw BadBins("bin count must be positive");
  double width = histogram_bin_width(samples, opts);

  std::size_t bins;
  if (opts.bin_width > 0.0) {
    double max = *std::max_element(samples.begin(), samples.end());
    bins = std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil(max / width)));
  } else {
    bins = static_cast<std::size_t>(opts.bin_count);
  }

  // Top edge is inclusive; with a quantile-capped range anything beyond it
  // is dropped and the densities are normalized over what remains.
  double top = static_cast<double>(bins) * width;
  std::vector<std::uint64_t> counts(bins, 0);
  std::uint64_t kept = 0;
  for (double x : samples) {
    if (x < 0.0 || x > top) continue;
    ++counts[std::min(static_cast<std::size_t>(x / width), bins - 1)];
    ++kept;
  }
  std::vector<HistogramBin> out(bins);
  for (std::size_t b = 0; b < bins; ++b) {
    out[b].center = (static_cast<double>(b) + 0.5) * width;
    out[b].density =
        kept == 0 ? 0.0
                  : static_cast<double>(counts[b]) / (static_cast<double>(kept) * width);
  }
  return out;
}

std::vector<SweepRow> sweep(const Puzzle& puzzle, const HintCatalog& catalog,
                            const SearchConfig& base, std::span<const std::uint32_t> agent_counts,
                            std::uint64_t reps, std::uint64_t master_seed, unsigned workers) {
  std::vector<SweepRow> rows;
  rows.reserve(agent_counts.size());
  for (std::size_t i = 0; i < agent_counts.size(); ++i) {
    SearchConfig config = base;
    config.agents = agent_counts[i];
    BatchResult br = batch(puzzle, catalog, config, reps, substream_seed(master_seed, i), workers);
    SampleSet s = sample_set(br);
    SweepRow row;
    row.heuristic = config.heuristic;
    row.agents = config.agents;
    row.reps = reps;
    row.censored = s.censored;
    row.mean_cost = sample_mean(s.costs);
    row.stderr_ = sample_stderr(s.costs);
    rows.push_back(row);
  }
  return rows;
}

BoardFillStat board_fill_stat(const Puzzle& puzzle, const HintCatalog& catalog,
                              std::uint32_t agents, std::uint64_t reps, std::uint64_t master_seed,
                              unsigned workers) {
  std::vector<double> sizes(reps, 0.0);
  SearchConfig config;
  config.heuristic = Heuristic::standard;
  config.agents = agents;
  config.hint_mode = catalog.mode;

  unsigned w = resolve_workers(workers, reps);
  auto work = [&](unsigned worker) {
    for (std::uint64_t i = worker; i < reps; i += w) {
      Rng rng(substream_seed(master_seed, i));
      SearchState state = init_run(puzzle, catalog, config, rng);
      sizes[i] = static_cast<double>(state.board->size());
    }
  };
  if (w <= 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(w);
    for (unsigned t = 0; t < w; ++t) pool.emplace_back(work, t);
    for (auto& th : pool) th.join();
  }

  BoardFillStat stat;
  stat.agents = agents;
  stat.reps = reps;
  stat.mean_size = sample_mean(sizes);
  stat.stderr_ = reps > 1 ? sample_stderr(sizes) : 0.0;
  return stat;
}

double exponential_density(double c, double lambda) {
  return std::exp(-c / lambda) / lambda;
}

std::vector<ReferencePoint> reference_curves(std::uint32_t agents, double p,
                                             std::span<const double> c_grid) {
  double m = static_cast<double>(agents);
  std::vector<ReferencePoint> out;
  out.reserve(c_grid.size());
  for (double c : c_grid) {
    ReferencePoint pt;
    pt.c = c;
    pt.exponential_density = exponential_density(c);
    pt.exponential_cdf = c <= 0.0 ? 0.0 : -std::expm1(-c);
    // T_M on the integer grid: P(T_M <= t) = 1 - (1-p)^(M floor(t)), t >= 1.
    double t = c / (m * p);
    pt.geometric_cdf =
        t < 1.0 ? 0.0 : -std::expm1(m * std::floor(t) * std::log1p(-p));
    out.push_back(pt);
  }
  return out;
}

}  // namespace alphaboard
