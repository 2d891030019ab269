// Test-only oracles, kept deliberately independent of the library's
// enumeration paths: straight loops over raw digit tuples, no injective DFS,
// no catalog plumbing.
#pragma once

#include <algorithm>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "alphaboard/puzzle.hpp"
#include "alphaboard/rng.hpp"

namespace alphaboard::testing {

using HintMap = std::vector<std::pair<int, int>>;  // (letter, digit), letter-sorted

// Every distinct letter->digit map satisfying this column under the given
// carry flag, found by scanning all 10^n raw digit tuples and keeping the
// injective ones.
inline std::set<HintMap> column_hint_maps(const ColumnSpec& col, bool carry_in) {
  const auto& letters = col.distinct_letters;
  auto n = static_cast<int>(letters.size());
  long total = 1;
  for (int i = 0; i < n; ++i) total *= 10;

  std::set<HintMap> maps;
  for (long code = 0; code < total; ++code) {
    int digit_of[10] = {};
    HintMap chosen;
    long rest = code;
    for (int i = 0; i < n; ++i) {
      int d = static_cast<int>(rest % 10);
      rest /= 10;
      digit_of[letters[i]] = d;
      chosen.emplace_back(letters[i], d);
    }

    bool injective = true;
    for (int i = 0; i < n && injective; ++i)
      for (int j = i + 1; j < n; ++j)
        if (chosen[i].second == chosen[j].second) {
          injective = false;
          break;
        }
    if (!injective) continue;

    int sum = carry_in ? 1 : 0;
    for (int l : col.operand_letters) sum += digit_of[l];
    if (sum % 10 != digit_of[col.result_letter]) continue;

    std::sort(chosen.begin(), chosen.end());
    maps.insert(chosen);
  }
  return maps;
}

// Full catalog of a puzzle as a set of maps: union over columns and
// admissible carry flags.
inline std::set<HintMap> all_hint_maps(const Puzzle& puzzle, bool extended) {
  std::set<HintMap> maps;
  for (const ColumnSpec& col : puzzle.columns) {
    auto no_carry = column_hint_maps(col, false);
    maps.insert(no_carry.begin(), no_carry.end());
    if (extended && col.carry_in_allowed) {
      auto carry = column_hint_maps(col, true);
      maps.insert(carry.begin(), carry.end());
    }
  }
  return maps;
}

// Pearson chi-square statistic against the given expected counts.
inline double chi_square(const std::vector<double>& observed,
                         const std::vector<double>& expected) {
  double chi2 = 0.0;
  for (std::size_t i = 0; i < observed.size(); ++i) {
    double d = observed[i] - expected[i];
    chi2 += d * d / expected[i];
  }
  return chi2;
}

// Random well-formed puzzle text with at most 10 distinct letters.
inline std::string random_puzzle_text(Rng& rng) {
  auto alphabet = 1 + static_cast<std::size_t>(rng.below(10));
  std::string pool = "ABCDEFGHIJKLMNOPQRSTUVWXYZ";
  for (std::size_t i = pool.size() - 1; i > 0; --i) {
    auto j = static_cast<std::size_t>(rng.below(i + 1));
    std::swap(pool[i], pool[j]);
  }
  pool.resize(alphabet);

  auto word = [&](std::size_t len) {
    std::string w;
    for (std::size_t i = 0; i < len; ++i) w += pool[rng.below(pool.size())];
    return w;
  };
  std::size_t a = 1 + rng.below(5);
  std::size_t b = 1 + rng.below(5);
  std::size_t r = 1 + rng.below(6);  // occasionally shorter than an operand
  return word(a) + "+" + word(b) + "=" + word(r);
}

}  // namespace alphaboard::testing
