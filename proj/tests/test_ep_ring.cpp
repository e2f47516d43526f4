#include <doctest.h>

#include <set>

#include "epcodes/ep_ring.hpp"
#include "epcodes/errors.hpp"
#include "support.hpp"

using namespace testsupport;

TEST_CASE("defining relations") {
  for (unsigned p : {2u, 3u, 5u, 7u}) {
    const auto r = EpElem::r(p), s = EpElem::s(p), t = EpElem::t(p), z = EpElem::zero(p);
    CHECK(r * r == r);
    CHECK(s * s == s);
    CHECK(r * s == r);
    CHECK(s * r == s);
    CHECK(r * s != s * r);
    CHECK(t * r == t);
    CHECK(r + s == EpElem(1, 1, p));
    for (const auto& x : ring_elements(p)) {
      CHECK(x * t == z);
      CHECK(x + (-x) == z);
      EpElem acc = z;
      for (unsigned k = 0; k < p; ++k) acc = acc + x;
      CHECK(acc == z);
    }
  }
  CHECK(EpElem::t(2) + EpElem::s(2) == EpElem::r(2));
}

TEST_CASE("closed-form product matches the bilinear expansion") {
  for (unsigned p : {2u, 3u, 5u}) {
    RingOracle oracle(p);
    const auto elems = ring_elements(p);
    REQUIRE(elems.size() == p * p);
    for (const auto& x : elems)
      for (const auto& y : elems) {
        CHECK(oracle.of(x * y) == oracle.mul(oracle.of(x), oracle.of(y)));
        CHECK(x * y == scalar_action(alpha(y), x));
        for (const auto& z : elems) {
          CHECK((x * y) * z == x * (y * z));
          CHECK(x * (y + z) == x * y + x * z);
          CHECK((x + y) * z == x * z + y * z);
        }
      }
  }
}

TEST_CASE("alpha is a surjective morphism with kernel I") {
  for (unsigned p : {2u, 3u, 5u}) {
    std::set<unsigned> image;
    std::size_t kernel = 0;
    for (const auto& x : ring_elements(p)) {
      image.insert(alpha(x).value());
      if (in_max_ideal(x)) {
        ++kernel;
        CHECK(alpha(x).value() == 0);
        CHECK(x == scalar_action(FpScalar(t_adic(x).v.value(), p), EpElem::t(p)));
      }
      for (const auto& y : ring_elements(p)) {
        CHECK(alpha(x * y) == alpha(x) * alpha(y));
        CHECK(alpha(x + y) == alpha(x) + alpha(y));
      }
    }
    CHECK(image.size() == p);
    CHECK(kernel == p);
  }
  CHECK(alpha(EpElem::r(3)).value() == 1);
  CHECK(alpha(EpElem::s(3)).value() == 1);
  CHECK(alpha(EpElem::t(3)).value() == 0);
  CHECK(alpha(EpElem(2, 2, 3)).value() == 1);
}

TEST_CASE("right zero divisors are exactly the maximal ideal") {
  for (unsigned p : {2u, 3u, 5u}) {
    for (const auto& y : ring_elements(p)) {
      bool divisor = false;
      for (const auto& x : ring_elements(p))
        if (!x.is_zero() && (x * y).is_zero()) divisor = true;
      CHECK(divisor == in_max_ideal(y));
    }
  }
  CHECK(in_max_ideal(EpElem::t(2)));
  CHECK_FALSE(in_max_ideal(EpElem::s(2)));
}

TEST_CASE("t-adic decomposition is a bijection") {
  for (unsigned p : {2u, 3u, 5u}) {
    std::set<std::pair<unsigned, unsigned>> seen;
    for (const auto& x : ring_elements(p)) {
      const auto [u, v] = t_adic(x);
      CHECK(EpElem::from_t_adic(u.value(), v.value(), p) == x);
      CHECK(u == alpha(x));
      seen.insert({u.value(), v.value()});
    }
    CHECK(seen.size() == p * p);
    CHECK(t_adic(EpElem::r(p)).u.value() == 1);
    CHECK(t_adic(EpElem::r(p)).v.value() == 0);
    CHECK(t_adic(EpElem::s(p)).v.value() == p - 1);
    CHECK(t_adic(EpElem::t(p)).u.value() == 0);
    CHECK(t_adic(EpElem::t(p)).v.value() == 1);
  }
}

TEST_CASE("scalar action") {
  CHECK(scalar_action(FpScalar(2, 3), EpElem::r(3)) == EpElem(2, 0, 3));
  CHECK_THROWS_AS((void)scalar_action(FpScalar(1, 2), EpElem::r(3)), ModulusError);
  CHECK_THROWS_AS((void)(EpElem::r(2) + EpElem::r(3)), ModulusError);
}

TEST_CASE("element tokens round-trip") {
  for (unsigned p : {2u, 3u, 5u, 7u})
    for (const auto& x : ring_elements(p)) CHECK(parse_elem(format_elem(x), p) == x);
  CHECK(format_elem(EpElem::zero(3)) == "0");
  CHECK(format_elem(EpElem::t(3)) == "t");
  CHECK(format_elem(EpElem(2, 0, 3)) == "2r");
  CHECK(parse_elem("r+s", 3) == EpElem(1, 1, 3));
  CHECK(parse_elem("2t", 3) == EpElem(2, 1, 3));
}

TEST_CASE("element parse errors") {
  CHECK_THROWS_AS((void)parse_elem("", 2), ParseError);
  CHECK_THROWS_AS((void)parse_elem("x", 2), ParseError);
  CHECK_THROWS_AS((void)parse_elem("2r", 2), ParseError);
  CHECK_THROWS_AS((void)parse_elem("r+", 3), ParseError);
  CHECK_THROWS_AS((void)parse_elem("rs", 3), ParseError);
}
