#include "alphaboard/board.hpp"

#include <algorithm>
#include <cassert>

namespace alphaboard {

void Board::post(std::span<const std::uint32_t> hints, Cost writer_cost) {
  assert(mode_ == BoardMode::standard || writer_cost >= 1);  // cost 0 halts the run first
  double reputation = mode_ == BoardMode::reputation
                          ? 1.0 / static_cast<double>(writer_cost)
                          : 0.0;
  for (std::uint32_t h : hints) {
    std::int32_t slot = slot_of_hint_[h];
    if (slot < 0) {
      slot_of_hint_[h] = static_cast<std::int32_t>(posted_.size());
      posted_.push_back(h);
      if (mode_ == BoardMode::reputation) reputations_.push_back(reputation);
    } else if (mode_ == BoardMode::reputation) {
      reputations_[static_cast<std::size_t>(slot)] = reputation;  // last writer wins
    }
  }
}

std::optional<std::uint32_t> Board::select(Rng& rng) const {
  if (posted_.empty()) return std::nullopt;
  if (mode_ == BoardMode::standard)
    return posted_[rng.below(posted_.size())];

  // Fresh cumulative sum every draw: exactly proportional, no drift from
  // incremental totals. The board holds at most a few hundred hints.
  cumulative_.resize(reputations_.size());
  double total = 0.0;
  for (std::size_t i = 0; i < reputations_.size(); ++i) {
    total += reputations_[i];
    cumulative_[i] = total;
  }
  double u = rng.uniform01() * total;
  auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), u);
  if (it == cumulative_.end()) --it;  // u == total after rounding
  return posted_[static_cast<std::size_t>(it - cumulative_.begin())];
}

}  // namespace alphaboard
