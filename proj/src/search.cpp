#include "alphaboard/search.hpp"

#include <cassert>
#include <cmath>
#include <stdexcept>

namespace alphaboard {

const char* heuristic_name(Heuristic h) {
  switch (h) {
    case Heuristic::independent: return "independent";
    case Heuristic::standard: return "standard";
    default: return "reputation";
  }
}

std::optional<Heuristic> heuristic_from_name(std::string_view name) {
  if (name == "independent") return Heuristic::independent;
  if (name == "standard") return Heuristic::standard;
  if (name == "reputation") return Heuristic::reputation;
  return std::nullopt;
}

namespace {

// Post the hints found in agent's current string. In reputation mode a
// solving string (cost 0) posts nothing: the run halts before any stamp
// could be written, so the board never holds a non-positive reputation.
void post_agent_hints(const Puzzle& puzzle, const HintCatalog& catalog, SearchState& state,
                      const Assignment& agent, Cost agent_cost) {
  Board& board = *state.board;
  if (agent_cost == 0 && board.mode() == BoardMode::reputation) return;
  extract_hints(puzzle, catalog, agent, state.scratch_hints);
  board.post(state.scratch_hints, agent_cost);
  if (!state.board_filled_at && board.full()) state.board_filled_at = state.updates;
}

}  // namespace

SearchState init_run(const Puzzle& puzzle, const HintCatalog& catalog, const SearchConfig& config,
                     Rng& rng) {
  SearchState state;
  state.agents.reserve(config.agents);
  if (config.heuristic != Heuristic::independent) {
    state.board.emplace(config.heuristic == Heuristic::reputation ? BoardMode::reputation
                                                                  : BoardMode::standard,
                        catalog.size());
  }
  for (std::uint32_t i = 0; i < config.agents; ++i) {
    const Assignment& agent = state.agents.emplace_back(random_assignment(rng));
    Cost c = cost(puzzle, agent);
    if (c == 0) state.solved = true;
    if (state.board) post_agent_hints(puzzle, catalog, state, agent, c);
  }
  return state;
}

void step(const Puzzle& puzzle, const HintCatalog& catalog, const SearchConfig& config,
          SearchState& state, Rng& rng) {
  assert(!state.solved);
  std::uint32_t target = static_cast<std::uint32_t>(rng.below(config.agents));
  Assignment& agent = state.agents[target];

  bool restarted = true;
  if (config.heuristic == Heuristic::independent) {
    agent = random_assignment(rng);
  } else {
    std::optional<std::uint32_t> choice = state.board->select(rng);
    if (choice && !hint_in_use(agent, catalog.hints[*choice])) {
      agent = incorporate_hint(agent, catalog.hints[*choice]);
      restarted = false;
    } else {
      agent = random_assignment(rng);
    }
  }
  if (restarted)
    ++state.restarts;
  else
    ++state.incorporations;

  Cost c = cost(puzzle, agent);
  ++state.updates;
  if (state.board) post_agent_hints(puzzle, catalog, state, agent, c);
  if (c == 0) {
    state.solved = true;
    state.solved_at = state.updates;
  }
}

RunRecord run_with_state(const Puzzle& puzzle, const HintCatalog& catalog,
                         const SearchConfig& config, SearchState& state) {
  if (!puzzle.solution_count)
    throw std::logic_error("puzzle solution count not set; run brute_force_solutions first");
  if (config.agents < 1) throw std::invalid_argument("need at least one agent");

  Rng rng(config.seed);
  state = init_run(puzzle, catalog, config, rng);
  while (!state.solved && state.updates < config.max_updates)
    step(puzzle, catalog, config, state, rng);

  std::uint64_t k = state.solved ? state.solved_at : config.max_updates;
  std::int64_t m = config.agents;

  RunRecord rec;
  rec.t_first = Rational::reduced(m + static_cast<std::int64_t>(k), m);
  rec.cost = Rational::reduced(*puzzle.solution_count * (m + static_cast<std::int64_t>(k)),
                               puzzle.state_space_size);
  if (state.board_filled_at)
    rec.fill_time = Rational::reduced(m + static_cast<std::int64_t>(*state.board_filled_at), m);
  rec.updates = k;
  rec.restarts = state.restarts;
  rec.incorporations = state.incorporations;
  rec.restart_fraction =
      k == 0 ? 0.0 : static_cast<double>(state.restarts) / static_cast<double>(k);
  rec.censored = !state.solved;
  rec.seed = config.seed;
  return rec;
}

RunRecord run(const Puzzle& puzzle, const HintCatalog& catalog, const SearchConfig& config) {
  SearchState state;
  return run_with_state(puzzle, catalog, config, state);
}

double mean_cost_independent(std::uint32_t agents, double p) {
  double mp = static_cast<double>(agents) * p;
  return mp / -std::expm1(static_cast<double>(agents) * std::log1p(-p));
}

}  // namespace alphaboard
