#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "alphaboard/puzzle.hpp"
#include "alphaboard/rng.hpp"

namespace alphaboard {

enum class BoardMode { standard, reputation };

// The shared hint store. Hints are never erased; the board only grows.
// standard:   posted hints are anonymous and selected uniformly.
// reputation: every posted hint carries the reputation (1/cost) of its last
//             writer and is selected with probability proportional to it;
//             re-posting overwrites the stamp.
class Board {
 public:
  Board(BoardMode mode, std::size_t catalog_size)
      : mode_(mode), slot_of_hint_(catalog_size, -1) {}

  BoardMode mode() const { return mode_; }
  std::size_t size() const { return posted_.size(); }
  std::size_t catalog_size() const { return slot_of_hint_.size(); }
  bool full() const { return posted_.size() == slot_of_hint_.size(); }
  bool contains(std::uint32_t hint) const { return slot_of_hint_[hint] >= 0; }

  void post(std::span<const std::uint32_t> hints, Cost writer_cost);

  // Uniform (standard) or reputation-weighted draw over the posted hints;
  // empty board yields nothing and consumes no randomness.
  std::optional<std::uint32_t> select(Rng& rng) const;

  std::span<const std::uint32_t> posted() const { return posted_; }
  double reputation_of(std::uint32_t hint) const {
    return reputations_[static_cast<std::size_t>(slot_of_hint_[hint])];
  }

 private:
  BoardMode mode_;
  std::vector<std::uint32_t> posted_;     // insertion order
  std::vector<std::int32_t> slot_of_hint_;
  std::vector<double> reputations_;       // parallel to posted_ (reputation mode)
  mutable std::vector<double> cumulative_;  // selection scratch
};

}  // namespace alphaboard
