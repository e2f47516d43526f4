#pragma once

// Test-only helpers: independent brute-force models of E_p and its codes, and
// seeded generators of random codes and monomial maps.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "epcodes/ep_code.hpp"
#include "epcodes/equiv.hpp"
#include "epcodes/fp_linalg.hpp"
#include "epcodes/subspaces.hpp"

namespace testsupport {

using namespace epc;

inline FpVec bits(unsigned p, std::string_view s) {
  std::vector<Digit> v;
  for (char c : s)
    if (c != ' ') v.push_back(static_cast<Digit>(c - '0'));
  return FpVec(p, v);
}

inline FpCode fp_code(unsigned p, std::initializer_list<std::string_view> rows, std::size_t n = 0) {
  std::vector<FpVec> vs;
  for (auto r : rows) vs.push_back(bits(p, r));
  if (n == 0 && !vs.empty()) n = vs.front().size();
  return FpCode::span_of(p, n, vs);
}

inline EpCode ep_code(std::string_view text) { return code_from_generators(parse_gen_matrix(text)); }

// ---- Brute-force model of E_p ----
//
// An element i r + j s is the integer i p + j. Products come from expanding
// bilinearly over the relation table rr = r, rs = r, sr = s, ss = s.
class RingOracle {
 public:
  explicit RingOracle(unsigned p) : p_(p), q_(p * p), add_(q_ * q_), mul_(q_ * q_) {
    for (unsigned x = 0; x < q_; ++x)
      for (unsigned y = 0; y < q_; ++y) {
        const unsigned i1 = x / p, j1 = x % p, i2 = y / p, j2 = y % p;
        add_[x * q_ + y] = ((i1 + i2) % p) * p + (j1 + j2) % p;
        // basis products: index 0 = r, 1 = s; table[a][b] gives the basis element of a*b
        const unsigned table[2][2] = {{0, 0}, {1, 1}};
        unsigned coeff[2] = {0, 0};
        const unsigned c1[2] = {i1, j1}, c2[2] = {i2, j2};
        for (int a = 0; a < 2; ++a)
          for (int b = 0; b < 2; ++b) coeff[table[a][b]] = (coeff[table[a][b]] + c1[a] * c2[b]) % p;
        mul_[x * q_ + y] = coeff[0] * p + coeff[1];
      }
  }

  [[nodiscard]] unsigned p() const { return p_; }
  [[nodiscard]] unsigned size() const { return q_; }
  [[nodiscard]] unsigned add(unsigned x, unsigned y) const { return add_[x * q_ + y]; }
  [[nodiscard]] unsigned mul(unsigned x, unsigned y) const { return mul_[x * q_ + y]; }
  [[nodiscard]] unsigned of(const EpElem& e) const { return e.r_coeff() * p_ + e.s_coeff(); }
  [[nodiscard]] EpElem elem(unsigned x) const { return EpElem(x / p_, x % p_, p_); }
  /// u r + v t with t = r + (p-1) s.
  [[nodiscard]] unsigned from_uv(unsigned u, unsigned v) const {
    return ((u + v) % p_) * p_ + (v * (p_ - 1)) % p_;
  }

 private:
  unsigned p_;
  unsigned q_;
  std::vector<unsigned> add_;
  std::vector<unsigned> mul_;
};

using Word = std::vector<unsigned>;  // coordinates as oracle indices
using WordSet = std::set<Word>;

inline Word add_words(const RingOracle& R, const Word& a, const Word& b) {
  Word out(a.size());
  for (std::size_t j = 0; j < a.size(); ++j) out[j] = R.add(a[j], b[j]);
  return out;
}

inline Word left_mul(const RingOracle& R, unsigned e, const Word& w) {
  Word out(w.size());
  for (std::size_t j = 0; j < w.size(); ++j) out[j] = R.mul(e, w[j]);
  return out;
}

/// sum_j x_j y_j.
inline unsigned inner(const RingOracle& R, const Word& x, const Word& y) {
  unsigned acc = 0;
  for (std::size_t j = 0; j < x.size(); ++j) acc = R.add(acc, R.mul(x[j], y[j]));
  return acc;
}

inline std::vector<Word> all_words(const RingOracle& R, std::size_t n) {
  std::vector<Word> out;
  Word w(n, 0);
  while (true) {
    out.push_back(w);
    std::size_t i = 0;
    for (; i < n; ++i) {
      if (++w[i] < R.size()) break;
      w[i] = 0;
    }
    if (i == n) return out;
  }
}

inline Word to_word(const RingOracle& R, const EpVec& v) {
  Word w;
  for (const auto& e : v.entries()) w.push_back(R.of(e));
  return w;
}

/// Closure of a generator set under addition, F_p scaling and left multiplication.
inline WordSet closure(const RingOracle& R, std::size_t n, const std::vector<Word>& gens) {
  WordSet set{Word(n, 0)};
  std::vector<Word> frontier{Word(n, 0)};
  auto grow = [&](const Word& w) {
    if (set.insert(w).second) frontier.push_back(w);
  };
  for (const auto& g : gens) grow(g);
  while (!frontier.empty()) {
    const Word w = frontier.back();
    frontier.pop_back();
    for (unsigned e = 0; e < R.size(); ++e) grow(left_mul(R, e, w));
    for (const auto& g : gens) grow(add_words(R, w, g));
  }
  // Close under sums of found elements as well.
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<Word> items(set.begin(), set.end());
    for (const auto& a : items)
      for (const auto& b : items)
        if (set.insert(add_words(R, a, b)).second) changed = true;
  }
  return set;
}

/// { r a + t b : a in Res, b in Tor }, built from the oracle alone.
inline WordSet codewords(const RingOracle& R, const EpCode& c) {
  WordSet out;
  const std::size_t n = c.length();
  std::vector<FpVec> res, tor;
  for_each_codeword(c.residue(), [&](std::span<const Digit> a) { res.emplace_back(R.p(), std::vector<Digit>(a.begin(), a.end())); });
  for_each_codeword(c.torsion(), [&](std::span<const Digit> b) { tor.emplace_back(R.p(), std::vector<Digit>(b.begin(), b.end())); });
  for (const auto& a : res)
    for (const auto& b : tor) {
      Word w(n);
      for (std::size_t j = 0; j < n; ++j) w[j] = R.from_uv(a[j], b[j]);
      out.insert(w);
    }
  return out;
}

inline WordSet left_dual_set(const RingOracle& R, std::size_t n, const WordSet& c) {
  WordSet out;
  for (const auto& z : all_words(R, n)) {
    bool ok = true;
    for (const auto& w : c)
      if (inner(R, z, w) != 0) {
        ok = false;
        break;
      }
    if (ok) out.insert(z);
  }
  return out;
}

inline WordSet right_dual_set(const RingOracle& R, std::size_t n, const WordSet& c) {
  WordSet out;
  for (const auto& z : all_words(R, n)) {
    bool ok = true;
    for (const auto& w : c)
      if (inner(R, w, z) != 0) {
        ok = false;
        break;
      }
    if (ok) out.insert(z);
  }
  return out;
}

inline WordSet intersection(const WordSet& a, const WordSet& b) {
  WordSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.begin()));
  return out;
}

/// Every E_p code of length n, as (R, T) pairs with R ⊆ T.
inline std::vector<EpCode> all_ep_codes(unsigned p, std::size_t n) {
  std::vector<FpCode> subs;
  for (std::size_t k = 0; k <= n; ++k)
    for (auto& c : enumerate_subspaces(p, n, k)) subs.push_back(std::move(c));
  std::vector<EpCode> out;
  for (const auto& t : subs)
    for (const auto& r : subs)
      if (r.dimension() <= t.dimension() && t.contains(r)) out.emplace_back(r, t);
  return out;
}

// ---- Random generation ----

inline FpCode random_fp_code(std::mt19937_64& rng, unsigned p, std::size_t n, std::size_t k) {
  std::uniform_int_distribution<unsigned> digit(0, p - 1);
  std::vector<FpVec> rows;
  for (std::size_t i = 0; i < k; ++i) {
    std::vector<Digit> v(n);
    for (auto& x : v) x = static_cast<Digit>(digit(rng));
    rows.emplace_back(p, v);
  }
  return FpCode::span_of(p, n, rows);
}

inline FpCode random_fp_code(std::mt19937_64& rng, unsigned p, std::size_t n) {
  std::uniform_int_distribution<std::size_t> dim(0, n);
  return random_fp_code(rng, p, n, dim(rng));
}

inline EpCode random_ep_code(std::mt19937_64& rng, unsigned p, std::size_t n) {
  const FpCode r = random_fp_code(rng, p, n);
  const FpCode extra = random_fp_code(rng, p, n);
  return EpCode(r, code_sum(r, extra));
}

inline MonomialMapFp random_map_fp(std::mt19937_64& rng, unsigned p, std::size_t n) {
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::uniform_int_distribution<unsigned> unit(1, p - 1);
  std::vector<Digit> scale(n);
  for (auto& s : scale) s = static_cast<Digit>(unit(rng));
  return MonomialMapFp(p, perm, scale);
}

inline MonomialMapEp random_map_ep(std::mt19937_64& rng, unsigned p, std::size_t n) {
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::uniform_int_distribution<unsigned> any(0, p - 1), unit(1, p - 1);
  std::vector<EpElem> scale;
  for (std::size_t j = 0; j < n; ++j) {
    // any element with alpha != 0: u r + v t with u != 0
    scale.push_back(EpElem::from_t_adic(unit(rng), any(rng), p));
  }
  return MonomialMapEp(p, perm, scale);
}

}  // namespace testsupport
