#pragma once

#include <array>
#include <cstdint>
#include <unordered_map>
#include <vector>

#include "alphaboard/puzzle.hpp"

namespace alphaboard {

// The original hint list only admits columns that add up correctly with no
// carry; the extended list (the default) also admits a carry-in of 1
// everywhere except the units column.
enum class HintMode { extended, no_carry };

struct HintProvenance {
  int position = 0;
  bool carry_in = false;

  friend bool operator==(const HintProvenance&, const HintProvenance&) = default;
};

// A consistent partial letter->digit map that makes one column sum correct
// modulo 10. Identity is the map alone; provenance records which column/carry
// combinations generate it.
struct Hint {
  struct Entry {
    std::uint8_t letter;
    Digit digit;
  };

  std::array<Entry, 3> entries{};  // column reading order, duplicates dropped
  std::uint8_t size = 0;
  std::uint64_t map_key = 0;       // canonical (letter-sorted) encoding
  std::vector<HintProvenance> provenance;
};

// Canonical key of a ≤3-entry map: bytes ((letter+1)<<4 | digit) folded in
// ascending letter order. Never zero, so prefixes cannot collide.
std::uint64_t hint_map_key(const Hint::Entry* entries, int count);

struct HintCatalog {
  HintMode mode = HintMode::extended;
  std::vector<Hint> hints;
  std::unordered_map<std::uint64_t, std::uint32_t> index_by_map;

  std::size_t size() const { return hints.size(); }

  // Distinct maps satisfying one column under one carry flag.
  int column_count(int position, bool carry_in) const;
};

// All distinct hints of a puzzle: for every column and every admissible carry
// flag, every injective digit choice for the column's distinct letters that
// satisfies the column equation modulo 10.
HintCatalog enumerate_hints(const Puzzle& puzzle, HintMode mode = HintMode::extended);

// Indices of the catalog hints contained in the assignment, i.e. the column/
// carry equations the assignment currently satisfies. Sorted, deduplicated;
// at most one per column.
std::vector<std::uint32_t> extract_hints(const Puzzle& puzzle, const HintCatalog& catalog,
                                         const Assignment& assignment);
void extract_hints(const Puzzle& puzzle, const HintCatalog& catalog, const Assignment& assignment,
                   std::vector<std::uint32_t>& out);

// True iff every entry of the hint already holds in the assignment.
bool hint_in_use(const Assignment& assignment, const Hint& hint);

// Installs each hint entry in turn by swapping the entry's slot with the slot
// currently holding the wanted digit: at most three transpositions, so at
// most six digits move.
Assignment incorporate_hint(const Assignment& assignment, const Hint& hint);

}  // namespace alphaboard
