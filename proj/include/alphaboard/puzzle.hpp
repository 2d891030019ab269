#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "alphaboard/rng.hpp"

namespace alphaboard {

using Digit = std::uint8_t;
using Cost = std::int64_t;

// Cost charged to any arrangement that puts digit 0 under a leading letter.
// Larger than every honest discrepancy, so those strings sort last.
inline constexpr Cost kLeadingZeroPenalty = 100'000'000;

inline constexpr int kDigits = 10;
inline constexpr int kMaxWordLength = 18;  // keeps word values inside int64

struct MalformedExpression : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct TooManyLetters : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An arrangement of the ten digits. Slot n holds the digit of letter n for
// n < num_letters; the remaining slots park the unused digits so that the
// whole thing is always a permutation of 0..9.
struct Assignment {
  std::array<Digit, kDigits> digits{};

  bool is_permutation() const {
    unsigned seen = 0;
    for (Digit d : digits) {
      if (d >= kDigits) return false;
      seen |= 1u << d;
    }
    return seen == 0x3FFu;
  }

  friend bool operator==(const Assignment&, const Assignment&) = default;
};

// One addition column. position 0 is the units (rightmost) column, the only
// one that cannot receive a carry.
struct ColumnSpec {
  int position = 0;
  std::vector<int> operand_letters;   // by occurrence: first operand, then second
  int result_letter = -1;
  bool carry_in_allowed = true;
  std::vector<int> distinct_letters;  // reading order: operands then result, dups dropped
};

enum class WordRole { first, second, result };

struct Puzzle {
  std::string first_word;
  std::string second_word;
  std::string result_word;

  std::vector<char> letters;              // distinct, alphabetically sorted
  int num_letters = 0;                    // L
  std::array<int, 26> letter_index{};     // 'A'-rel -> letter slot, or -1
  std::vector<int> leading_letters;       // letter indices, sorted
  std::vector<ColumnSpec> columns;        // most-significant first
  std::array<std::vector<int>, 3> word_letters;  // per role, most-significant first

  std::int64_t state_space_size = 0;      // 10!/(10-L)!
  // Set by brute_force_solutions (or a CLI override); success probability is
  // solution_count / state_space_size and is never guessed.
  std::optional<std::int64_t> solution_count;

  double success_probability() const {
    return static_cast<double>(*solution_count) / static_cast<double>(state_space_size);
  }

  const std::string& word(WordRole role) const {
    switch (role) {
      case WordRole::first: return first_word;
      case WordRole::second: return second_word;
      default: return result_word;
    }
  }

  const ColumnSpec& column_at_position(int position) const {
    return columns[columns.size() - 1 - static_cast<std::size_t>(position)];
  }
};

// Parses "WORD1+WORD2=WORD3" (uppercase words, whitespace around tokens
// tolerated). A result shorter than an operand is allowed; the cost function
// is still well defined.
Puzzle parse_puzzle(std::string_view text);

// Canonical rendering: uppercase, single '+', single '=', no spaces.
std::string render_puzzle(const Puzzle& puzzle);

std::int64_t word_value(const Puzzle& puzzle, WordRole role, const Assignment& assignment);

// |result - (first + second)|, or kLeadingZeroPenalty when a leading letter
// holds digit 0. Zero exactly when the assignment solves the puzzle.
Cost cost(const Puzzle& puzzle, const Assignment& assignment);

bool is_solution(const Puzzle& puzzle, const Assignment& assignment);

// Uniform over all 10! slot arrangements (unbiased Fisher-Yates), hence
// uniform over the puzzle's letter->digit injections.
Assignment random_assignment(Rng& rng);

struct SolutionSet {
  std::int64_t count = 0;
  std::vector<Assignment> solutions;  // lexicographic in slot digits
};

// Exhaustive enumeration of all 10!/(10-L)! injections. Slots past L hold the
// unused digits in ascending order. Also stores the count on the puzzle.
SolutionSet brute_force_solutions(Puzzle& puzzle);

}  // namespace alphaboard
