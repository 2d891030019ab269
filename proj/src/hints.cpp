#include "alphaboard/hints.hpp"

#include <algorithm>
#include <cassert>

namespace alphaboard {

std::uint64_t hint_map_key(const Hint::Entry* entries, int count) {
  std::array<Hint::Entry, 3> sorted{};
  std::copy(entries, entries + count, sorted.begin());
  std::sort(sorted.begin(), sorted.begin() + count,
            [](const Hint::Entry& a, const Hint::Entry& b) { return a.letter < b.letter; });
  std::uint64_t key = 0;
  for (int i = 0; i < count; ++i)
    key = (key << 8) | static_cast<std::uint64_t>(((sorted[i].letter + 1u) << 4) | sorted[i].digit);
  return key;
}

int HintCatalog::column_count(int position, bool carry_in) const {
  int n = 0;
  for (const Hint& h : hints)
    for (const HintProvenance& p : h.provenance)
      if (p.position == position && p.carry_in == carry_in) {
        ++n;
        break;
      }
  return n;
}

namespace {

bool column_equation_holds(const ColumnSpec& col, const Digit* digit_of_letter, bool carry_in) {
  int sum = carry_in ? 1 : 0;
  for (int l : col.operand_letters) sum += digit_of_letter[l];
  return sum % 10 == digit_of_letter[col.result_letter];
}

void add_hint(HintCatalog& catalog, const ColumnSpec& col, const Digit* digit_of_letter,
              bool carry_in) {
  Hint candidate;
  candidate.size = static_cast<std::uint8_t>(col.distinct_letters.size());
  for (std::size_t i = 0; i < col.distinct_letters.size(); ++i) {
    int letter = col.distinct_letters[i];
    candidate.entries[i] = {static_cast<std::uint8_t>(letter), digit_of_letter[letter]};
  }
  candidate.map_key = hint_map_key(candidate.entries.data(), candidate.size);

  HintProvenance prov{col.position, carry_in};
  auto it = catalog.index_by_map.find(candidate.map_key);
  if (it != catalog.index_by_map.end()) {
    auto& existing = catalog.hints[it->second].provenance;
    if (std::find(existing.begin(), existing.end(), prov) == existing.end())
      existing.push_back(prov);
    return;
  }
  candidate.provenance.push_back(prov);
  catalog.index_by_map.emplace(candidate.map_key, static_cast<std::uint32_t>(catalog.hints.size()));
  catalog.hints.push_back(std::move(candidate));
}

// Injective digit choices for the column's distinct letters, lexicographic.
void enumerate_column(HintCatalog& catalog, const ColumnSpec& col, bool carry_in,
                      Digit* digit_of_letter, unsigned used, std::size_t depth) {
  if (depth == col.distinct_letters.size()) {
    if (column_equation_holds(col, digit_of_letter, carry_in))
      add_hint(catalog, col, digit_of_letter, carry_in);
    return;
  }
  int letter = col.distinct_letters[depth];
  for (Digit d = 0; d < kDigits; ++d) {
    if (used & (1u << d)) continue;
    digit_of_letter[letter] = d;
    enumerate_column(catalog, col, carry_in, digit_of_letter, used | (1u << d), depth + 1);
  }
}

}  // namespace

HintCatalog enumerate_hints(const Puzzle& puzzle, HintMode mode) {
  HintCatalog catalog;
  catalog.mode = mode;
  Digit digit_of_letter[kDigits] = {};
  // Units column first; catalog indices group by column, then carry flag.
  for (int pos = 0; pos < static_cast<int>(puzzle.columns.size()); ++pos) {
    const ColumnSpec& col = puzzle.column_at_position(pos);
    enumerate_column(catalog, col, false, digit_of_letter, 0, 0);
    if (col.carry_in_allowed && mode == HintMode::extended)
      enumerate_column(catalog, col, true, digit_of_letter, 0, 0);
  }
  return catalog;
}

void extract_hints(const Puzzle& puzzle, const HintCatalog& catalog, const Assignment& assignment,
                   std::vector<std::uint32_t>& out) {
  out.clear();
  Hint::Entry entries[3];
  for (const ColumnSpec& col : puzzle.columns) {
    int sum = 0;
    for (int l : col.operand_letters) sum += assignment.digits[l];
    int result_digit = assignment.digits[col.result_letter];
    int max_carry = (col.carry_in_allowed && catalog.mode == HintMode::extended) ? 1 : 0;
    for (int carry = 0; carry <= max_carry; ++carry) {
      if ((sum + carry) % 10 != result_digit) continue;
      int n = static_cast<int>(col.distinct_letters.size());
      for (int i = 0; i < n; ++i) {
        int letter = col.distinct_letters[i];
        entries[i] = {static_cast<std::uint8_t>(letter), assignment.digits[letter]};
      }
      // every satisfying restriction is in the catalog by construction
      out.push_back(catalog.index_by_map.at(hint_map_key(entries, n)));
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
}

std::vector<std::uint32_t> extract_hints(const Puzzle& puzzle, const HintCatalog& catalog,
                                         const Assignment& assignment) {
  std::vector<std::uint32_t> out;
  extract_hints(puzzle, catalog, assignment, out);
  return out;
}

bool hint_in_use(const Assignment& assignment, const Hint& hint) {
  for (int i = 0; i < hint.size; ++i)
    if (assignment.digits[hint.entries[i].letter] != hint.entries[i].digit) return false;
  return true;
}

Assignment incorporate_hint(const Assignment& assignment, const Hint& hint) {
  Assignment a = assignment;
  for (int i = 0; i < hint.size; ++i) {
    const Hint::Entry& e = hint.entries[i];
    int holder = 0;
    while (a.digits[holder] != e.digit) ++holder;
    std::swap(a.digits[e.letter], a.digits[holder]);
  }
  assert(a.is_permutation());
  return a;
}

}  // namespace alphaboard
