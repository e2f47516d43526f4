#pragma once

// Arithmetic in E_p = <r, s | pr = ps = 0, r^2 = r, s^2 = s, rs = r, sr = s>,
// the non-unital ring of order p^2. Elements are stored over the basis {r, s}.
//
// Every product reduces to x * y = alpha(y) * x, where alpha(i r + j s) = i + j
// is reduction modulo the maximal ideal I = {m t}, t = r + (p - 1) s.

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "epcodes/fp_linalg.hpp"

namespace epc {

class EpElem {
 public:
  /// i r + j s, coefficients reduced mod p.
  EpElem(long long r_coeff, long long s_coeff, unsigned p);

  static EpElem zero(unsigned p) { return {0, 0, p}; }
  static EpElem r(unsigned p) { return {1, 0, p}; }
  static EpElem s(unsigned p) { return {0, 1, p}; }
  static EpElem t(unsigned p) { return {1, static_cast<long long>(p) - 1, p}; }
  /// u r + v t.
  static EpElem from_t_adic(unsigned u, unsigned v, unsigned p);

  [[nodiscard]] unsigned r_coeff() const { return i_; }
  [[nodiscard]] unsigned s_coeff() const { return j_; }
  [[nodiscard]] unsigned modulus() const { return p_; }
  [[nodiscard]] bool is_zero() const { return i_ == 0 && j_ == 0; }

  friend auto operator<=>(const EpElem&, const EpElem&) = default;
  friend bool operator==(const EpElem&, const EpElem&) = default;

 private:
  Digit i_;
  Digit j_;
  Digit p_;
};

[[nodiscard]] EpElem ep_add(const EpElem& x, const EpElem& y);
[[nodiscard]] EpElem ep_neg(const EpElem& x);
[[nodiscard]] EpElem ep_mul(const EpElem& x, const EpElem& y);

[[nodiscard]] inline EpElem operator+(const EpElem& x, const EpElem& y) { return ep_add(x, y); }
[[nodiscard]] inline EpElem operator-(const EpElem& x) { return ep_neg(x); }
[[nodiscard]] inline EpElem operator-(const EpElem& x, const EpElem& y) { return ep_add(x, ep_neg(y)); }
[[nodiscard]] inline EpElem operator*(const EpElem& x, const EpElem& y) { return ep_mul(x, y); }

/// Reduction modulo the maximal ideal: alpha(u r + v t) = u.
[[nodiscard]] FpScalar alpha(const EpElem& x);

struct TAdic {
  FpScalar u;
  FpScalar v;
};

/// The unique (u, v) with x = u r + v t.
[[nodiscard]] TAdic t_adic(const EpElem& x);

/// The F_p action u x = x u.
[[nodiscard]] EpElem scalar_action(FpScalar u, const EpElem& x);

/// True iff x lies in I = {m t}, i.e. alpha(x) = 0.
[[nodiscard]] bool in_max_ideal(const EpElem& x);

/// All p^2 elements, ordered by (r coefficient, s coefficient).
[[nodiscard]] std::vector<EpElem> ring_elements(unsigned p);

/// Shortest token: `0`, `[c]r`, `[c]s`, `[c]t` for multiples of t, else `[c]r+[d]s`.
[[nodiscard]] std::string format_elem(const EpElem& x);

/// Parses a sum of terms `[c]r`, `[c]s`, `[c]t` or `0`, coefficients in 1..p-1.
/// ParseError columns are 1-based offsets into `token`.
[[nodiscard]] EpElem parse_elem(std::string_view token, unsigned p);

}  // namespace epc
