#include "alphaboard/io.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

namespace alphaboard {

std::string format_g12(double value) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", value);
  return buf;
}

CsvRecord to_csv_record(const RunRecord& record, std::uint64_t rep_index) {
  CsvRecord row;
  row.rep_index = rep_index;
  row.seed = record.seed;
  row.t_first = record.t_first.value();
  row.cost = record.cost.value();
  if (record.fill_time) row.fill_time = record.fill_time->value();
  row.restart_fraction = record.restart_fraction;
  row.censored = record.censored;
  return row;
}

namespace {

constexpr const char* kRecordHeader = "rep_index,seed,T_M,C,fill_time,restart_fraction,censored";

void append_record_row(std::string& out, const CsvRecord& r) {
  out += std::to_string(r.rep_index);
  out += ',';
  out += std::to_string(r.seed);
  out += ',';
  out += format_g12(r.t_first);
  out += ',';
  out += format_g12(r.cost);
  out += ',';
  if (r.fill_time) out += format_g12(*r.fill_time);
  out += ',';
  out += format_g12(r.restart_fraction);
  out += ',';
  out += r.censored ? '1' : '0';
  out += '\n';
}

}  // namespace

std::string render_records_csv(std::span<const CsvRecord> records) {
  std::string out = kRecordHeader;
  out += '\n';
  for (const CsvRecord& r : records) append_record_row(out, r);
  return out;
}

std::string render_records_csv(std::span<const RunRecord> records) {
  std::vector<CsvRecord> rows;
  rows.reserve(records.size());
  for (std::size_t i = 0; i < records.size(); ++i)
    rows.push_back(to_csv_record(records[i], i));
  return render_records_csv(rows);
}

std::string render_records_jsonl(std::span<const RunRecord> records) {
  std::string out;
  for (std::size_t i = 0; i < records.size(); ++i) {
    CsvRecord r = to_csv_record(records[i], i);
    out += "{\"rep_index\":" + std::to_string(r.rep_index);
    out += ",\"seed\":" + std::to_string(r.seed);
    out += ",\"T_M\":" + format_g12(r.t_first);
    out += ",\"C\":" + format_g12(r.cost);
    out += ",\"fill_time\":" + (r.fill_time ? format_g12(*r.fill_time) : std::string("null"));
    out += ",\"restart_fraction\":" + format_g12(r.restart_fraction);
    out += std::string(",\"censored\":") + (r.censored ? "true" : "false");
    out += "}\n";
  }
  return out;
}

std::vector<CsvRecord> parse_records_csv(std::string_view text) {
  std::vector<CsvRecord> out;
  std::istringstream in{std::string(text)};
  std::string line;
  if (!std::getline(in, line) || line != kRecordHeader)
    throw std::runtime_error("bad record CSV header");
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::vector<std::string> fields;
    std::size_t start = 0;
    while (true) {
      std::size_t comma = line.find(',', start);
      fields.push_back(line.substr(start, comma - start));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    if (fields.size() != 7)
      throw std::runtime_error("record CSV line " + std::to_string(lineno) + ": want 7 fields");
    CsvRecord r;
    r.rep_index = std::stoull(fields[0]);
    r.seed = std::stoull(fields[1]);
    r.t_first = std::stod(fields[2]);
    r.cost = std::stod(fields[3]);
    if (!fields[4].empty()) r.fill_time = std::stod(fields[4]);
    r.restart_fraction = std::stod(fields[5]);
    r.censored = fields[6] == "1";
    out.push_back(r);
  }
  return out;
}

std::string render_run_json(const Puzzle& puzzle, const SearchConfig& config,
                            const RunRecord& record) {
  std::string out = "{";
  out += "\"puzzle\":\"" + render_puzzle(puzzle) + "\"";
  out += ",\"heuristic\":\"" + std::string(heuristic_name(config.heuristic)) + "\"";
  out += ",\"agents\":" + std::to_string(config.agents);
  out += ",\"hint_mode\":\"" +
         std::string(config.hint_mode == HintMode::extended ? "extended" : "no-carry") + "\"";
  out += ",\"seed\":" + std::to_string(record.seed);
  out += ",\"max_updates\":" + std::to_string(config.max_updates);
  out += ",\"T_M\":" + format_g12(record.t_first.value());
  out += ",\"C\":" + format_g12(record.cost.value());
  out += ",\"fill_time\":" +
         (record.fill_time ? format_g12(record.fill_time->value()) : std::string("null"));
  out += ",\"restart_fraction\":" + format_g12(record.restart_fraction);
  out += ",\"updates\":" + std::to_string(record.updates);
  out += ",\"restarts\":" + std::to_string(record.restarts);
  out += ",\"incorporations\":" + std::to_string(record.incorporations);
  out += std::string(",\"censored\":") + (record.censored ? "true" : "false");
  out += "}";
  return out;
}

std::string render_summary_json(const SampleSet& samples, const FitResult& fit) {
  std::string out = "{";
  out += "\"fingerprint\":\"" + samples.fingerprint + "\"";
  out += ",\"n\":" + std::to_string(fit.n);
  out += ",\"censored\":" + std::to_string(samples.censored);
  out += ",\"mean\":" + format_g12(fit.mean);
  out += ",\"stderr\":" + format_g12(sample_stderr(samples.costs));
  out += ",\"lambda_hat\":" + format_g12(fit.lambda_hat);
  out += ",\"lambda_stderr\":" + format_g12(fit.stderr_);
  out += ",\"ks\":" + format_g12(fit.ks_statistic);
  out += "}";
  return out;
}

std::string render_hint_catalog_csv(const Puzzle& puzzle, const HintCatalog& catalog) {
  std::string out = "hint_index,letters,digits,provenance\n";
  for (std::size_t i = 0; i < catalog.hints.size(); ++i) {
    const Hint& h = catalog.hints[i];
    out += std::to_string(i);
    out += ',';
    for (int e = 0; e < h.size; ++e) out += puzzle.letters[h.entries[e].letter];
    out += ',';
    for (int e = 0; e < h.size; ++e) out += static_cast<char>('0' + h.entries[e].digit);
    out += ',';
    for (std::size_t p = 0; p < h.provenance.size(); ++p) {
      if (p > 0) out += ';';
      out += std::to_string(h.provenance[p].position);
      if (h.provenance[p].carry_in) out += "+c";
    }
    out += '\n';
  }
  return out;
}

std::string render_board_csv(const Board& board) {
  std::vector<std::uint32_t> hints(board.posted().begin(), board.posted().end());
  std::sort(hints.begin(), hints.end());
  std::string out = "hint_index,reputation\n";
  for (std::uint32_t h : hints) {
    out += std::to_string(h);
    out += ',';
    out += board.mode() == BoardMode::reputation ? format_g12(board.reputation_of(h)) : "1";
    out += '\n';
  }
  return out;
}

std::string render_sweep_csv(std::span<const SweepRow> rows) {
  std::string out = "heuristic,M,reps,mean_cost,stderr\n";
  for (const SweepRow& r : rows) {
    out += heuristic_name(r.heuristic);
    out += ',';
    out += std::to_string(r.agents);
    out += ',';
    out += std::to_string(r.reps);
    out += ',';
    out += format_g12(r.mean_cost);
    out += ',';
    out += format_g12(r.stderr_);
    out += '\n';
  }
  return out;
}

std::string render_board_fill_csv(std::span<const BoardFillStat> rows) {
  std::string out = "M,reps,mean_board_size,stderr\n";
  for (const BoardFillStat& r : rows) {
    out += std::to_string(r.agents);
    out += ',';
    out += std::to_string(r.reps);
    out += ',';
    out += format_g12(r.mean_size);
    out += ',';
    out += format_g12(r.stderr_);
    out += '\n';
  }
  return out;
}

std::string render_histogram_csv(std::span<const HistogramBin> bins) {
  std::string out = "bin_center,density\n";
  for (const HistogramBin& b : bins) {
    out += format_g12(b.center);
    out += ',';
    out += format_g12(b.density);
    out += '\n';
  }
  return out;
}

std::string render_solutions_csv(const Puzzle& puzzle, const SolutionSet& solutions) {
  std::string out = "solution_index,assignment,mapping\n";
  for (std::size_t i = 0; i < solutions.solutions.size(); ++i) {
    const Assignment& a = solutions.solutions[i];
    out += std::to_string(i);
    out += ',';
    for (Digit d : a.digits) out += static_cast<char>('0' + d);
    out += ',';
    for (int l = 0; l < puzzle.num_letters; ++l) {
      if (l > 0) out += ';';
      out += puzzle.letters[l];
      out += '=';
      out += static_cast<char>('0' + a.digits[l]);
    }
    out += '\n';
  }
  return out;
}

void write_output(const std::string& path, std::string_view content) {
  if (path.empty()) {
    std::cout << content;
    std::cout.flush();
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << content;
  if (!out) throw std::runtime_error("failed writing " + path);
}

}  // namespace alphaboard
