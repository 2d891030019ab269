#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "alphaboard/board.hpp"
#include "alphaboard/hints.hpp"
#include "alphaboard/search.hpp"
#include "alphaboard/stats.hpp"

namespace alphaboard {

// Shortest-of-12-significant-digits decimal rendering used for every real
// number we emit, so identical inputs always produce identical bytes.
std::string format_g12(double value);

// What one record row looks like on disk. rep_index is the position of the
// record in its batch.
struct CsvRecord {
  std::uint64_t rep_index = 0;
  std::uint64_t seed = 0;
  double t_first = 0.0;
  double cost = 0.0;
  std::optional<double> fill_time;
  double restart_fraction = 0.0;
  bool censored = false;

  friend bool operator==(const CsvRecord&, const CsvRecord&) = default;
};

CsvRecord to_csv_record(const RunRecord& record, std::uint64_t rep_index);

// Header: rep_index,seed,T_M,C,fill_time,restart_fraction,censored
std::string render_records_csv(std::span<const RunRecord> records);
std::string render_records_csv(std::span<const CsvRecord> records);
std::string render_records_jsonl(std::span<const RunRecord> records);

// Inverse of render_records_csv; throws std::runtime_error on bad input.
std::vector<CsvRecord> parse_records_csv(std::string_view text);

std::string render_run_json(const Puzzle& puzzle, const SearchConfig& config,
                            const RunRecord& record);

std::string render_summary_json(const SampleSet& samples, const FitResult& fit);

// hint_index,letters,digits,provenance — provenance entries "pos" / "pos+c"
// joined by ';'.
std::string render_hint_catalog_csv(const Puzzle& puzzle, const HintCatalog& catalog);

// hint_index,reputation rows sorted by hint index; a standard-mode board
// reports weight 1 for every posted hint.
std::string render_board_csv(const Board& board);

std::string render_sweep_csv(std::span<const SweepRow> rows);

std::string render_board_fill_csv(std::span<const BoardFillStat> rows);

std::string render_histogram_csv(std::span<const HistogramBin> bins);

std::string render_solutions_csv(const Puzzle& puzzle, const SolutionSet& solutions);

// Writes to the path, or to stdout when path is empty. Throws
// std::runtime_error with the path on failure.
void write_output(const std::string& path, std::string_view content);

}  // namespace alphaboard
