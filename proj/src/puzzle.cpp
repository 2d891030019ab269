#include "alphaboard/puzzle.hpp"

#include <algorithm>
#include <cassert>
#include <cctype>
#include <cstdlib>

namespace alphaboard {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::string check_word(std::string_view raw) {
  std::string_view w = trim(raw);
  if (w.empty()) throw MalformedExpression("empty word");
  if (w.size() > kMaxWordLength)
    throw MalformedExpression("word longer than " + std::to_string(kMaxWordLength) + " letters");
  for (char c : w) {
    if (c < 'A' || c > 'Z')
      throw MalformedExpression("words must be uppercase A-Z, got '" + std::string(1, c) + "'");
  }
  return std::string(w);
}

}  // namespace

Puzzle parse_puzzle(std::string_view text) {
  auto plus = text.find('+');
  auto eq = text.find('=');
  if (plus == std::string_view::npos || eq == std::string_view::npos || eq < plus ||
      text.find('+', plus + 1) != std::string_view::npos ||
      text.find('=', eq + 1) != std::string_view::npos) {
    throw MalformedExpression("expected WORD1+WORD2=WORD3");
  }

  Puzzle pz;
  pz.first_word = check_word(text.substr(0, plus));
  pz.second_word = check_word(text.substr(plus + 1, eq - plus - 1));
  pz.result_word = check_word(text.substr(eq + 1));

  pz.letter_index.fill(-1);
  for (const std::string* w : {&pz.first_word, &pz.second_word, &pz.result_word}) {
    for (char c : *w) {
      if (pz.letter_index[c - 'A'] < 0) {
        pz.letter_index[c - 'A'] = 0;  // mark, number later
        pz.letters.push_back(c);
      }
    }
  }
  if (pz.letters.size() > kDigits)
    throw TooManyLetters(std::to_string(pz.letters.size()) + " distinct letters, at most 10 allowed");
  std::sort(pz.letters.begin(), pz.letters.end());
  pz.num_letters = static_cast<int>(pz.letters.size());
  for (int i = 0; i < pz.num_letters; ++i) pz.letter_index[pz.letters[i] - 'A'] = i;

  pz.state_space_size = 1;
  for (int i = 0; i < pz.num_letters; ++i) pz.state_space_size *= kDigits - i;

  auto index_of = [&pz](char c) { return pz.letter_index[c - 'A']; };

  for (int role = 0; role < 3; ++role) {
    const std::string& w =
        pz.word(static_cast<WordRole>(role));
    auto& seq = pz.word_letters[role];
    seq.reserve(w.size());
    for (char c : w) seq.push_back(index_of(c));
    pz.leading_letters.push_back(index_of(w.front()));
  }
  std::sort(pz.leading_letters.begin(), pz.leading_letters.end());
  pz.leading_letters.erase(std::unique(pz.leading_letters.begin(), pz.leading_letters.end()),
                           pz.leading_letters.end());

  // One column per result letter, right-aligned; operand letters past the
  // result's length belong to no column.
  int result_len = static_cast<int>(pz.result_word.size());
  for (int pos = result_len - 1; pos >= 0; --pos) {
    ColumnSpec col;
    col.position = pos;
    col.carry_in_allowed = pos != 0;
    for (const std::string* w : {&pz.first_word, &pz.second_word}) {
      int i = static_cast<int>(w->size()) - 1 - pos;
      if (i >= 0) col.operand_letters.push_back(index_of((*w)[i]));
    }
    col.result_letter = index_of(pz.result_word[pz.result_word.size() - 1 - pos]);
    for (int l : col.operand_letters) {
      if (std::find(col.distinct_letters.begin(), col.distinct_letters.end(), l) ==
          col.distinct_letters.end())
        col.distinct_letters.push_back(l);
    }
    if (std::find(col.distinct_letters.begin(), col.distinct_letters.end(), col.result_letter) ==
        col.distinct_letters.end())
      col.distinct_letters.push_back(col.result_letter);
    pz.columns.push_back(std::move(col));  // most-significant first
  }
  return pz;
}

std::string render_puzzle(const Puzzle& puzzle) {
  return puzzle.first_word + "+" + puzzle.second_word + "=" + puzzle.result_word;
}

std::int64_t word_value(const Puzzle& puzzle, WordRole role, const Assignment& assignment) {
  std::int64_t v = 0;
  for (int letter : puzzle.word_letters[static_cast<int>(role)])
    v = v * 10 + assignment.digits[letter];
  return v;
}

Cost cost(const Puzzle& puzzle, const Assignment& assignment) {
  for (int letter : puzzle.leading_letters)
    if (assignment.digits[letter] == 0) return kLeadingZeroPenalty;
  std::int64_t first = word_value(puzzle, WordRole::first, assignment);
  std::int64_t second = word_value(puzzle, WordRole::second, assignment);
  std::int64_t result = word_value(puzzle, WordRole::result, assignment);
  return std::llabs(result - (first + second));
}

bool is_solution(const Puzzle& puzzle, const Assignment& assignment) {
  return cost(puzzle, assignment) == 0;
}

Assignment random_assignment(Rng& rng) {
  Assignment a;
  for (int i = 0; i < kDigits; ++i) a.digits[i] = static_cast<Digit>(i);
  for (int i = kDigits - 1; i > 0; --i) {
    auto j = static_cast<int>(rng.below(static_cast<std::uint64_t>(i) + 1));
    std::swap(a.digits[i], a.digits[j]);
  }
  assert(a.is_permutation());
  return a;
}

namespace {

void enumerate_injections(const Puzzle& pz, int slot, unsigned used, Assignment& a,
                          SolutionSet& out) {
  if (slot == pz.num_letters) {
    int fill = pz.num_letters;
    for (Digit d = 0; d < kDigits; ++d)
      if (!(used & (1u << d))) a.digits[fill++] = d;
    if (cost(pz, a) == 0) {
      ++out.count;
      out.solutions.push_back(a);
    }
    return;
  }
  for (Digit d = 0; d < kDigits; ++d) {
    if (used & (1u << d)) continue;
    a.digits[slot] = d;
    enumerate_injections(pz, slot + 1, used | (1u << d), a, out);
  }
}

}  // namespace

SolutionSet brute_force_solutions(Puzzle& puzzle) {
  SolutionSet out;
  Assignment a;
  enumerate_injections(puzzle, 0, 0, a, out);
  puzzle.solution_count = out.count;
  return out;
}

}  // namespace alphaboard
