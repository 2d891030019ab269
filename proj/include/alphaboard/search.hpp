#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "alphaboard/board.hpp"
#include "alphaboard/hints.hpp"
#include "alphaboard/puzzle.hpp"
#include "alphaboard/rational.hpp"
#include "alphaboard/rng.hpp"

namespace alphaboard {

enum class Heuristic { independent, standard, reputation };

const char* heuristic_name(Heuristic h);
std::optional<Heuristic> heuristic_from_name(std::string_view name);

struct SearchConfig {
  Heuristic heuristic = Heuristic::standard;
  std::uint32_t agents = 1;                      // M
  std::uint64_t max_updates = 1'000'000'000;     // censoring cap on k
  std::uint64_t seed = 0;
  HintMode hint_mode = HintMode::extended;
};

// Time is tracked as the integer count k of single-agent updates;
// t = 1 + k/M exactly.
struct SearchState {
  std::vector<Assignment> agents;
  std::optional<Board> board;       // absent for the independent heuristic
  std::uint64_t updates = 0;        // k
  bool solved = false;
  std::uint64_t solved_at = 0;      // k when the solution appeared (0 = at init)
  std::uint64_t restarts = 0;
  std::uint64_t incorporations = 0;
  std::optional<std::uint64_t> board_filled_at;  // k when every hint was posted

  std::vector<std::uint32_t> scratch_hints;
};

struct RunRecord {
  Rational t_first;                   // T_M = min time any agent holds the solution
  Rational cost;                      // C = M * p * T_M
  std::optional<Rational> fill_time;  // t when the board first held every hint
  double restart_fraction = 0.0;      // restarts / updates (0 when k = 0)
  std::uint64_t updates = 0;          // k*
  std::uint64_t restarts = 0;
  std::uint64_t incorporations = 0;
  bool censored = false;
  std::uint64_t seed = 0;
};

// All M agents start as uniform random strings; blackboard heuristics post
// each agent's hints in index order. If an initial string already solves the
// puzzle the state comes back solved with T_M = 1.
SearchState init_run(const Puzzle& puzzle, const HintCatalog& catalog, const SearchConfig& config,
                     Rng& rng);

// One single-agent update: pick a target agent, replace or improve its
// string, post the new string's hints (blackboard heuristics), advance time.
// Pre: !state.solved and the cap has not been reached.
void step(const Puzzle& puzzle, const HintCatalog& catalog, const SearchConfig& config,
          SearchState& state, Rng& rng);

// Full replication: init, then step until solved or censored by the cap.
// A deterministic function of (config, seed). Requires puzzle.solution_count.
RunRecord run(const Puzzle& puzzle, const HintCatalog& catalog, const SearchConfig& config);

// run() that also leaves the final state behind (board dumps, diagnostics).
RunRecord run_with_state(const Puzzle& puzzle, const HintCatalog& catalog,
                         const SearchConfig& config, SearchState& state);

// Closed-form mean cost of the independent search, M*p / (1 - (1-p)^M).
double mean_cost_independent(std::uint32_t agents, double p);

}  // namespace alphaboard
