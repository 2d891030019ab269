#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "alphaboard/hints.hpp"
#include "alphaboard/puzzle.hpp"
#include "oracles.hpp"

using namespace alphaboard;

namespace {

Assignment make_assignment(std::initializer_list<int> digits) {
  Assignment a;
  int i = 0;
  for (int d : digits) a.digits[i++] = static_cast<Digit>(d);
  return a;
}

const Assignment kDgrExample = make_assignment({0, 2, 9, 4, 8, 1, 7, 6, 3, 5});
const Assignment kDgrSolution = make_assignment({4, 3, 5, 9, 1, 8, 6, 2, 7, 0});

// Letter indices for DONALD+GERALD=ROBERT (alphabetical).
enum : std::uint8_t { A, B, D, E, G, L, N, O, R, T };

const Hint& find_hint(const HintCatalog& catalog, std::initializer_list<Hint::Entry> entries) {
  std::vector<Hint::Entry> es(entries);
  auto it = catalog.index_by_map.find(hint_map_key(es.data(), static_cast<int>(es.size())));
  REQUIRE(it != catalog.index_by_map.end());
  return catalog.hints[it->second];
}

std::set<testing::HintMap> catalog_maps(const HintCatalog& catalog) {
  std::set<testing::HintMap> maps;
  for (const Hint& h : catalog.hints) {
    testing::HintMap m;
    for (int i = 0; i < h.size; ++i) m.emplace_back(h.entries[i].letter, h.entries[i].digit);
    std::sort(m.begin(), m.end());
    maps.insert(m);
  }
  return maps;
}

}  // namespace

TEST_CASE("hints: the extended catalog of DONALD+GERALD=ROBERT has 351 entries") {
  Puzzle pz = parse_puzzle("DONALD+GERALD=ROBERT");
  HintCatalog catalog = enumerate_hints(pz);
  CHECK(catalog.size() == 351);
  CHECK(catalog.index_by_map.size() == 351);

  // per-column tallies, units column outward
  CHECK(catalog.column_count(0, false) == 9);   // D+D=T
  CHECK(catalog.column_count(1, false) == 9);   // L+L=R
  CHECK(catalog.column_count(2, false) == 9);   // A+A=E
  CHECK(catalog.column_count(3, false) == 72);  // N+R=B
  CHECK(catalog.column_count(4, false) == 9);   // O+E=O
  CHECK(catalog.column_count(5, false) == 72);  // D+G=R
  CHECK(catalog.column_count(0, true) == 0);    // no carry into the units column
  CHECK(catalog.column_count(1, true) == 9);
  CHECK(catalog.column_count(2, true) == 9);
  CHECK(catalog.column_count(3, true) == 72);
  CHECK(catalog.column_count(4, true) == 9);
  CHECK(catalog.column_count(5, true) == 72);
}

TEST_CASE("hints: units-column hints are D in 1..9 with T = 2D mod 10") {
  Puzzle pz = parse_puzzle("DONALD+GERALD=ROBERT");
  HintCatalog catalog = enumerate_hints(pz);
  int found = 0;
  for (const Hint& h : catalog.hints) {
    bool units = false;
    for (const auto& p : h.provenance) units |= p.position == 0;
    if (!units) continue;
    ++found;
    REQUIRE(h.size == 2);
    CHECK(h.entries[0].letter == D);
    CHECK(h.entries[1].letter == T);
    CHECK(h.entries[0].digit >= 1);
    CHECK(h.entries[1].digit == (2 * h.entries[0].digit) % 10);
  }
  CHECK(found == 9);
}

TEST_CASE("hints: exactly 6 catalog entries sit inside the solution") {
  Puzzle pz = parse_puzzle("DONALD+GERALD=ROBERT");
  HintCatalog catalog = enumerate_hints(pz);

  int subsets = 0;
  for (const Hint& h : catalog.hints)
    if (hint_in_use(kDgrSolution, h)) ++subsets;
  CHECK(subsets == 6);

  auto extracted = extract_hints(pz, catalog, kDgrSolution);
  CHECK(extracted.size() == 6);

  // extraction returns exactly the subset hints
  std::set<std::uint32_t> via_scan;
  for (std::uint32_t i = 0; i < catalog.size(); ++i)
    if (hint_in_use(kDgrSolution, catalog.hints[i])) via_scan.insert(i);
  CHECK(std::set<std::uint32_t>(extracted.begin(), extracted.end()) == via_scan);

  // the two no-carry hints named by the reference solution
  const Hint& nrb = find_hint(catalog, {{N, 6}, {R, 7}, {B, 3}});
  const Hint& dt = find_hint(catalog, {{D, 5}, {T, 0}});
  CHECK(hint_in_use(kDgrSolution, nrb));
  CHECK(hint_in_use(kDgrSolution, dt));
}

TEST_CASE("hints: the example string carries exactly one hint, L=1 R=3 with carry") {
  Puzzle pz = parse_puzzle("DONALD+GERALD=ROBERT");
  HintCatalog catalog = enumerate_hints(pz);
  auto extracted = extract_hints(pz, catalog, kDgrExample);
  REQUIRE(extracted.size() == 1);
  const Hint& h = catalog.hints[extracted[0]];
  REQUIRE(h.size == 2);
  CHECK(h.entries[0].letter == L);
  CHECK(h.entries[0].digit == 1);
  CHECK(h.entries[1].letter == R);
  CHECK(h.entries[1].digit == 3);
  REQUIRE(h.provenance.size() == 1);
  CHECK(h.provenance[0].position == 1);
  CHECK(h.provenance[0].carry_in);
  CHECK(hint_in_use(kDgrExample, h));
}

TEST_CASE("hints: hint_in_use") {
  Puzzle pz = parse_puzzle("DONALD+GERALD=ROBERT");
  HintCatalog catalog = enumerate_hints(pz);
  CHECK(hint_in_use(kDgrExample, find_hint(catalog, {{L, 1}, {R, 3}})));
  CHECK_FALSE(hint_in_use(kDgrExample, find_hint(catalog, {{N, 1}, {R, 4}, {B, 5}})));
  CHECK(hint_in_use(kDgrExample, Hint{}));  // vacuous
}

TEST_CASE("hints: incorporation reproduces the worked example digit for digit") {
  Puzzle pz = parse_puzzle("DONALD+GERALD=ROBERT");
  HintCatalog catalog = enumerate_hints(pz);

  Assignment got = incorporate_hint(kDgrExample, find_hint(catalog, {{N, 1}, {R, 4}, {B, 5}}));
  CHECK(got == make_assignment({0, 5, 9, 3, 8, 7, 1, 6, 4, 2}));

  got = incorporate_hint(kDgrExample, find_hint(catalog, {{D, 5}, {T, 0}}));
  CHECK(got == make_assignment({9, 2, 5, 4, 8, 1, 7, 6, 3, 0}));

  // a hint already in use leaves the string untouched
  got = incorporate_hint(kDgrExample, find_hint(catalog, {{L, 1}, {R, 3}}));
  CHECK(got == kDgrExample);
}

TEST_CASE("hints: incorporation properties over random strings and hints") {
  for (const char* text : {"DONALD+GERALD=ROBERT", "WOW+HOT=TEA"}) {
    Puzzle pz = parse_puzzle(text);
    HintCatalog catalog = enumerate_hints(pz);
    Rng rng(99);
    for (int i = 0; i < 10'000; ++i) {
      Assignment before = random_assignment(rng);
      const Hint& h = catalog.hints[rng.below(catalog.size())];
      Assignment after = incorporate_hint(before, h);
      CHECK(after.is_permutation());
      CHECK(hint_in_use(after, h));
      int moved = 0;
      for (int s = 0; s < kDigits; ++s)
        if (before.digits[s] != after.digits[s]) ++moved;
      CHECK(moved <= 6);
    }
  }
}

TEST_CASE("hints: catalog equals the brute-force column oracle") {
  for (const char* text : {"DONALD+GERALD=ROBERT", "WOW+HOT=TEA"}) {
    Puzzle pz = parse_puzzle(text);
    HintCatalog catalog = enumerate_hints(pz);
    CHECK(catalog_maps(catalog) == testing::all_hint_maps(pz, true));
  }

  Rng rng(31337);
  for (int trial = 0; trial < 20; ++trial) {
    Puzzle pz = parse_puzzle(testing::random_puzzle_text(rng));
    HintCatalog catalog = enumerate_hints(pz);
    CHECK(catalog_maps(catalog) == testing::all_hint_maps(pz, true));
    HintCatalog plain = enumerate_hints(pz, HintMode::no_carry);
    CHECK(catalog_maps(plain) == testing::all_hint_maps(pz, false));
  }
}

TEST_CASE("hints: the no-carry catalog is the 180-hint original list") {
  Puzzle pz = parse_puzzle("DONALD+GERALD=ROBERT");
  HintCatalog catalog = enumerate_hints(pz, HintMode::no_carry);
  CHECK(catalog.size() == 180);
  for (const Hint& h : catalog.hints)
    for (const auto& p : h.provenance) CHECK_FALSE(p.carry_in);

  // extraction under the no-carry catalog never sees the carry-only hint
  auto extracted = extract_hints(pz, catalog, kDgrExample);
  CHECK(extracted.empty());
}

TEST_CASE("hints: extraction stays within the catalog and the column bound") {
  Puzzle pz = parse_puzzle("WOW+HOT=TEA");
  HintCatalog catalog = enumerate_hints(pz);
  Rng rng(8);
  std::vector<std::uint32_t> out;
  for (int i = 0; i < 20'000; ++i) {
    extract_hints(pz, catalog, random_assignment(rng), out);
    CHECK(out.size() <= pz.columns.size());
    for (std::uint32_t idx : out) CHECK(idx < catalog.size());
  }
}

TEST_CASE("hints: single-letter columns extend the modulo rule") {
  // ATEA is longer than both operands: its leading column holds only A,
  // so A=0 without carry and A=1 with carry.
  Puzzle pz = parse_puzzle("WOW+HOT=ATEA");
  HintCatalog catalog = enumerate_hints(pz);
  CHECK(catalog.column_count(3, false) == 1);
  CHECK(catalog.column_count(3, true) == 1);
  CHECK(catalog_maps(catalog) == testing::all_hint_maps(pz, true));
}
