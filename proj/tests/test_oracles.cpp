// Library results against brute-force models built from the ring relations
// alone, exhaustively over every code of length n <= 3 for p in {2, 3}.

#include <doctest.h>

#include <random>

#include "epcodes/ep_code.hpp"
#include "epcodes/equiv.hpp"
#include "support.hpp"

using namespace testsupport;

namespace {

WordSet words_of(const RingOracle& R, const EpCode& c) { return codewords(R, c); }

struct Case {
  unsigned p;
  std::size_t n;
};

const Case kCases[] = {{2, 1}, {2, 2}, {2, 3}, {3, 1}, {3, 2}, {3, 3}};

}  // namespace

TEST_CASE("ring oracle reproduces the closed-form product") {
  for (unsigned p : {2u, 3u, 5u}) {
    RingOracle R(p);
    for (unsigned x = 0; x < R.size(); ++x)
      for (unsigned y = 0; y < R.size(); ++y) {
        CHECK(R.of(R.elem(x) * R.elem(y)) == R.mul(x, y));
        CHECK(R.of(R.elem(x) + R.elem(y)) == R.add(x, y));
      }
  }
}

TEST_CASE("codeword sets have the stated cardinality") {
  for (const auto& [p, n] : kCases) {
    RingOracle R(p);
    for (const auto& c : all_ep_codes(p, n)) {
      std::size_t expect = 1;
      for (std::size_t i = 0; i < c.cardinality_exp(); ++i) expect *= p;
      CHECK(words_of(R, c).size() == expect);
    }
  }
}

TEST_CASE("structural duals equal brute-force duals") {
  for (const auto& [p, n] : kCases) {
    CAPTURE(p);
    CAPTURE(n);
    RingOracle R(p);
    for (const auto& c : all_ep_codes(p, n)) {
      const WordSet w = words_of(R, c);
      const WordSet l = left_dual_set(R, n, w);
      const WordSet r = right_dual_set(R, n, w);
      CHECK(words_of(R, left_dual(c)) == l);
      CHECK(words_of(R, right_dual(c)) == r);
      CHECK(words_of(R, intersect(left_dual(c), right_dual(c))) == intersection(l, r));

      // Definitional predicates over raw word sets.
      const bool lsd = (w == l);
      const bool rsd = (w == r);
      const bool sd = (w == intersection(l, r));
      CHECK(is_left_self_dual(c) == lsd);
      CHECK(is_right_self_dual(c) == rsd);
      CHECK(is_self_dual(c) == sd);
      CHECK(by_definition::is_left_self_dual(c) == lsd);
      CHECK(by_definition::is_right_self_dual(c) == rsd);
      CHECK(by_definition::is_self_dual(c) == sd);
      CHECK(is_lcd(c) == by_definition::is_lcd(c));
    }
  }
}

TEST_CASE("qsd holds exactly for self-dual codes") {
  for (const auto& [p, n] : kCases) {
    RingOracle R(p);
    for (const auto& c : all_ep_codes(p, n)) {
      const WordSet w = words_of(R, c);
      const WordSet both = intersection(left_dual_set(R, n, w), right_dual_set(R, n, w));
      std::size_t pn = 1;
      for (std::size_t i = 0; i < n; ++i) pn *= p;
      const bool qsd = intersection(w, both) == w && w.size() == pn;
      CHECK(is_qsd(c) == qsd);
      CHECK(is_qsd(c) == is_self_dual(c));
    }
  }
}

TEST_CASE("no nonzero code meets its right dual trivially") {
  for (const auto& [p, n] : kCases) {
    RingOracle R(p);
    for (const auto& c : all_ep_codes(p, n)) {
      if (c.is_zero()) {
        CHECK(by_definition::is_right_lcd(c));
        continue;
      }
      const WordSet w = words_of(R, c);
      CHECK(intersection(w, right_dual_set(R, n, w)).size() > 1);
      CHECK_FALSE(by_definition::is_right_lcd(c));
    }
  }
}

TEST_CASE("code_from_generators equals submodule closure") {
  std::mt19937_64 rng(7);
  for (const auto& [p, n] : kCases) {
    CAPTURE(p);
    CAPTURE(n);
    RingOracle R(p);
    const auto words = all_words(R, n);
    auto check = [&](const std::vector<Word>& gens) {
      std::vector<EpVec> rows;
      for (const auto& g : gens) {
        std::vector<EpElem> e;
        for (unsigned x : g) e.push_back(R.elem(x));
        rows.emplace_back(p, e);
      }
      const EpCode c = code_from_generators(EpGenMatrix(p, n, rows));
      CHECK(words_of(R, c) == closure(R, n, gens));
    };
    // every single row
    for (const auto& w : words) check({w});
    // every pair of rows where that stays small, random triples otherwise
    if (words.size() <= 64) {
      for (std::size_t a = 0; a < words.size(); ++a)
        for (std::size_t b = a + 1; b < words.size(); ++b) check({words[a], words[b]});
    }
    std::uniform_int_distribution<std::size_t> pick(0, words.size() - 1);
    for (int trial = 0; trial < 150; ++trial) check({words[pick(rng)], words[pick(rng)], words[pick(rng)]});
  }
}

TEST_CASE("apply_ep equals codeword transport") {
  std::mt19937_64 rng(11);
  for (const auto& [p, n] : kCases) {
    CAPTURE(p);
    CAPTURE(n);
    RingOracle R(p);
    for (const auto& c : all_ep_codes(p, n)) {
      const WordSet w = words_of(R, c);
      for (int trial = 0; trial < 12; ++trial) {
        const MonomialMapEp m = random_map_ep(rng, p, n);
        WordSet moved;
        for (const auto& x : w) {
          Word y(n, 0);
          for (std::size_t i = 0; i < n; ++i) y[m.perm()[i]] = R.mul(x[i], R.of(m.scale()[m.perm()[i]]));
          moved.insert(y);
        }
        CHECK(words_of(R, apply_ep(m, c)) == moved);
      }
    }
  }
}
