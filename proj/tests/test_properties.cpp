// Seeded randomized properties, 1000+ cases per suite, n <= 8 over F_2 and
// n <= 5 over F_3.

#include <doctest.h>

#include <random>

#include "epcodes/ep_code.hpp"
#include "epcodes/equiv.hpp"
#include "support.hpp"

using namespace testsupport;

namespace {

constexpr int kCases = 1200;

struct Shape {
  unsigned p;
  std::size_t n;
};

Shape random_shape(std::mt19937_64& rng) {
  const unsigned p = std::uniform_int_distribution<int>(0, 1)(rng) == 0 ? 2 : 3;
  const std::size_t max_n = p == 2 ? 8 : 5;
  return {p, std::uniform_int_distribution<std::size_t>(1, max_n)(rng)};
}

// Free code half of the time, anything otherwise.
EpCode random_mixed_code(std::mt19937_64& rng, unsigned p, std::size_t n) {
  if (std::uniform_int_distribution<int>(0, 1)(rng) == 0) return EpCode::free_code(random_fp_code(rng, p, n));
  return random_ep_code(rng, p, n);
}

// Minimum weight over every codeword r a + t b, straight from the definition.
std::optional<std::size_t> brute_distance(const EpCode& c) {
  std::optional<std::size_t> best;
  const unsigned p = c.modulus();
  for_each_codeword(c, [&](std::span<const Digit> a, std::span<const Digit> b) {
    const EpVec x = EpVec::from_t_adic(FpVec(p, {a.begin(), a.end()}), FpVec(p, {b.begin(), b.end()}));
    const std::size_t w = x.weight();
    if (w > 0 && (!best || w < *best)) best = w;
  });
  return best;
}

// A random monomial image of a self-dual F_p code: sums of (1,1) blocks over
// F_2, the tetracode over F_3 at n = 4.
std::optional<FpCode> random_self_dual_fp(std::mt19937_64& rng, unsigned p, std::size_t n) {
  std::vector<FpVec> rows;
  if (p == 2) {
    if (n % 2 != 0) return std::nullopt;
    for (std::size_t i = 0; i < n; i += 2) {
      std::vector<Digit> v(n, 0);
      v[i] = v[i + 1] = 1;
      rows.emplace_back(p, v);
    }
  } else {
    if (n != 4) return std::nullopt;
    rows = {bits(3, "1011"), bits(3, "0112")};
  }
  return apply_fp(random_map_fp(rng, p, n), FpCode::span_of(p, n, rows));
}

}  // namespace

TEST_CASE("distance of a code is the distance of its torsion code") {
  std::mt19937_64 rng(101);
  for (int i = 0; i < kCases; ++i) {
    const auto [p, n] = random_shape(rng);
    const EpCode c = random_mixed_code(rng, p, n);
    CAPTURE(format_gen_matrix(canonical_generator_matrix(c)));
    const auto d = min_distance(c);
    CHECK(d == brute_distance(c));
    CHECK(d == min_distance_fp(c.torsion()));
    if (c.is_free()) CHECK(d == min_distance_fp(c.residue()));
  }
}

TEST_CASE("LCD iff free with LCD residue") {
  std::mt19937_64 rng(102);
  int positives = 0;
  for (int i = 0; i < kCases; ++i) {
    const auto [p, n] = random_shape(rng);
    const EpCode c = random_mixed_code(rng, p, n);
    const bool def = by_definition::is_lcd(c);
    CHECK(def == (c.is_free() && is_lcd_fp(c.residue())));
    CHECK(def == is_lcd(c));
    positives += def;
  }
  CHECK(positives > kCases / 10);
}

TEST_CASE("left self-dual iff free with self-dual residue") {
  std::mt19937_64 rng(103);
  int positives = 0;
  for (int i = 0; i < kCases; ++i) {
    const auto [p, n] = random_shape(rng);
    EpCode c = random_mixed_code(rng, p, n);
    const int mode = std::uniform_int_distribution<int>(0, 2)(rng);
    if (mode == 0) {
      if (auto sd = random_self_dual_fp(rng, p, n)) c = EpCode::free_code(*sd);
    } else if (mode == 1) {
      // Non-free neighbour of a self-dual pair: (D, D^⊥) with D self-orthogonal.
      if (auto sd = random_self_dual_fp(rng, p, n)) {
        const FpCode half = FpCode::span_of(p, n, {sd->basis().row_vec(0)});
        c = EpCode(half, dual_code(half));
      }
    }
    const bool def = by_definition::is_left_self_dual(c);
    CHECK(def == (c.is_free() && is_self_dual_fp(c.residue())));
    CHECK(def == is_left_self_dual(c));
    positives += def;
  }
  CHECK(positives > kCases / 10);
}

TEST_CASE("free codes are equivalent iff their residues are") {
  std::mt19937_64 rng(104);
  int equivalent = 0;
  for (int i = 0; i < kCases; ++i) {
    const auto [p, n] = random_shape(rng);
    const FpCode d1 = random_fp_code(rng, p, n);
    const bool related = std::uniform_int_distribution<int>(0, 1)(rng) == 0;
    const FpCode d2 = related ? apply_fp(random_map_fp(rng, p, n), d1) : random_fp_code(rng, p, n, d1.dimension());
    const EpCode c1 = EpCode::free_code(d1), c2 = EpCode::free_code(d2);

    const auto wf = equivalent_fp(d1, d2);
    const auto we = equivalent_ep(c1, c2);
    REQUIRE(wf.has_value() == we.has_value());
    if (related) CHECK(wf.has_value());
    if (wf) {
      ++equivalent;
      // Residue witness lifts to a code witness, and the code witness reduces to a residue witness.
      CHECK(apply_ep(MonomialMapEp::lift(*wf), c1) == c2);
      CHECK(apply_ep(*we, c1) == c2);
      CHECK(apply_fp(we->reduce(), d1) == d2);
      CHECK(apply_fp(*wf, d1) == d2);
    }
  }
  CHECK(equivalent >= kCases / 2);
}

TEST_CASE("Singleton bound holds") {
  std::mt19937_64 rng(105);
  for (int i = 0; i < kCases; ++i) {
    const auto [p, n] = random_shape(rng);
    const EpCode c = random_mixed_code(rng, p, n);
    const auto d = min_distance(c);
    if (!d) {
      CHECK(c.is_zero());
      continue;
    }
    CHECK(c.cardinality_exp() <= 2 * (n - *d + 1));
    const auto status = mds_status_ep(c);
    CHECK((status == MdsStatus::Mds) == (c.cardinality_exp() == 2 * (n - *d + 1)));
    CHECK((status == MdsStatus::Amds) == (c.cardinality_exp() == 2 * (n - *d)));
  }
}

TEST_CASE("monomial maps act as a group on F_p codes") {
  std::mt19937_64 rng(106);
  for (int i = 0; i < kCases; ++i) {
    const auto [p, n] = random_shape(rng);
    const FpCode c = random_fp_code(rng, p, n);
    const auto a = random_map_fp(rng, p, n), b = random_map_fp(rng, p, n);
    CHECK(apply_fp(compose(a, b), c) == apply_fp(a, apply_fp(b, c)));
    CHECK(apply_fp(MonomialMapFp::identity(p, n), c) == c);
    CHECK(apply_fp(a.inverse(), apply_fp(a, c)) == c);
    CHECK(compose(a, a.inverse()) == MonomialMapFp::identity(p, n));
    CHECK(c.dimension() == apply_fp(a, c).dimension());
    CHECK(weight_enumerator_fp(c) == weight_enumerator_fp(apply_fp(a, c)));
  }
}

TEST_CASE("monomial maps act as a group on E_p codes") {
  std::mt19937_64 rng(107);
  for (int i = 0; i < kCases; ++i) {
    const auto [p, n] = random_shape(rng);
    const EpCode c = random_mixed_code(rng, p, n);
    const auto a = random_map_ep(rng, p, n), b = random_map_ep(rng, p, n);
    CHECK(apply_ep(compose(a, b), c) == apply_ep(a, apply_ep(b, c)));
    CHECK(compose(a, b).reduce() == compose(a.reduce(), b.reduce()));
    CHECK(apply_ep(MonomialMapEp::lift(MonomialMapFp::identity(p, n)), c) == c);
    CHECK(apply_ep(MonomialMapEp::lift(a.reduce().inverse()), apply_ep(a, c)) == c);

    // On vectors: x (A B) = (x A) B in the composition order of compose.
    std::vector<Digit> u(n), v(n);
    std::uniform_int_distribution<unsigned> digit(0, p - 1);
    for (std::size_t j = 0; j < n; ++j) u[j] = static_cast<Digit>(digit(rng)), v[j] = static_cast<Digit>(digit(rng));
    const EpVec x = EpVec::from_t_adic(FpVec(p, u), FpVec(p, v));
    CHECK(compose(a, b).apply(x) == a.apply(b.apply(x)));

    // Invariants are preserved.
    const EpCode img = apply_ep(a, c);
    CHECK(img.m1() == c.m1());
    CHECK(img.m2() == c.m2());
    CHECK(min_distance(img) == min_distance(c));
    CHECK(is_lcd(img) == is_lcd(c));
  }
}
