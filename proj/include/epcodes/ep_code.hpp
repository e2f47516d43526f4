#pragma once

// Linear codes over E_p (left submodules of E_p^n). A code is held as the pair
// (R, T) of F_p codes with R ⊆ T and C = { r a + t b : a ∈ R, b ∈ T }, where R
// is the residue code and T the torsion code. |C| = p^(dim R + dim T).

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "epcodes/ep_ring.hpp"
#include "epcodes/fp_linalg.hpp"

namespace epc {

class EpVec {
 public:
  EpVec(unsigned p, std::vector<EpElem> entries);
  /// Coordinatewise a_j r + b_j t.
  static EpVec from_t_adic(const FpVec& a, const FpVec& b);

  [[nodiscard]] unsigned modulus() const { return p_; }
  [[nodiscard]] std::size_t size() const { return entries_.size(); }
  [[nodiscard]] const EpElem& operator[](std::size_t j) const { return entries_[j]; }
  [[nodiscard]] const std::vector<EpElem>& entries() const { return entries_; }

  /// Per-coordinate u components (the image under alpha).
  [[nodiscard]] FpVec r_part() const;
  /// Per-coordinate v components.
  [[nodiscard]] FpVec t_part() const;
  [[nodiscard]] std::size_t weight() const;

  friend bool operator==(const EpVec&, const EpVec&) = default;

 private:
  unsigned p_;
  std::vector<EpElem> entries_;
};

/// Generator matrix as an input/output format.
class EpGenMatrix {
 public:
  /// Throws ShapeError on rows of the wrong length, ModulusError on mixed moduli.
  EpGenMatrix(unsigned p, std::size_t n, std::vector<EpVec> rows);

  [[nodiscard]] unsigned modulus() const { return p_; }
  [[nodiscard]] std::size_t length() const { return n_; }
  [[nodiscard]] const std::vector<EpVec>& rows() const { return rows_; }

  friend bool operator==(const EpGenMatrix&, const EpGenMatrix&) = default;

 private:
  unsigned p_;
  std::size_t n_;
  std::vector<EpVec> rows_;
};

class EpCode {
 public:
  /// Throws std::invalid_argument unless residue ⊆ torsion with equal length and modulus.
  EpCode(FpCode residue, FpCode torsion);

  static EpCode zero(unsigned p, std::size_t n);
  /// E_p^n.
  static EpCode full(unsigned p, std::size_t n);
  /// t F_p^n.
  static EpCode torsion_space(unsigned p, std::size_t n);
  /// The free code r D ⊕ t D generated by r G for a generator matrix G of D.
  static EpCode free_code(const FpCode& d);

  [[nodiscard]] unsigned modulus() const { return residue_.modulus(); }
  [[nodiscard]] std::size_t length() const { return residue_.length(); }
  [[nodiscard]] const FpCode& residue() const { return residue_; }
  [[nodiscard]] const FpCode& torsion() const { return torsion_; }
  [[nodiscard]] std::size_t m1() const { return residue_.dimension(); }
  [[nodiscard]] std::size_t m2() const { return torsion_.dimension() - residue_.dimension(); }
  [[nodiscard]] bool is_free() const { return residue_ == torsion_; }
  [[nodiscard]] bool is_zero() const { return torsion_.is_zero(); }
  /// log_p |C| = 2 m1 + m2.
  [[nodiscard]] std::size_t cardinality_exp() const { return residue_.dimension() + torsion_.dimension(); }

  [[nodiscard]] bool contains(const EpVec& x) const;

  friend bool operator==(const EpCode&, const EpCode&) = default;

 private:
  FpCode residue_;
  FpCode torsion_;
};

/// Visits every codeword r a + t b as the pair (a, b).
template <class Visitor>
void for_each_codeword(const EpCode& c, Visitor&& visit) {
  for_each_codeword(c.residue(), [&](std::span<const Digit> a) {
    for_each_codeword(c.torsion(), [&](std::span<const Digit> b) { visit(a, b); });
  });
}

/// The smallest left submodule containing the rows: R = span{alpha(row)},
/// T = R + span{t-parts of rows}.
[[nodiscard]] EpCode code_from_generators(const EpGenMatrix& g);

[[nodiscard]] inline const FpCode& residue(const EpCode& c) { return c.residue(); }
[[nodiscard]] inline const FpCode& torsion(const EpCode& c) { return c.torsion(); }
[[nodiscard]] inline bool is_free(const EpCode& c) { return c.is_free(); }
[[nodiscard]] inline std::size_t cardinality_exp(const EpCode& c) { return c.cardinality_exp(); }

/// { z : <z, w> = 0 for all w in C } = (Res^⊥, Res^⊥).
[[nodiscard]] EpCode left_dual(const EpCode& c);
/// { z : <w, z> = 0 for all w in C } = (Tor^⊥, F_p^n).
[[nodiscard]] EpCode right_dual(const EpCode& c);
[[nodiscard]] EpCode intersect(const EpCode& a, const EpCode& b);

[[nodiscard]] bool is_left_nice(const EpCode& c);
[[nodiscard]] bool is_right_nice(const EpCode& c);

// Structural characterizations.
[[nodiscard]] bool is_lcd(const EpCode& c);              // free with LCD residue
[[nodiscard]] bool is_left_self_dual(const EpCode& c);   // free with self-dual residue
[[nodiscard]] bool is_right_self_dual(const EpCode& c);  // C = t F_p^n
[[nodiscard]] bool is_self_dual(const EpCode& c);        // Tor = Res^⊥, Res self-orthogonal
[[nodiscard]] bool is_qsd(const EpCode& c);

/// The same predicates evaluated straight from their definitions on top of
/// left_dual / right_dual / intersect.
namespace by_definition {
[[nodiscard]] bool is_lcd(const EpCode& c);
[[nodiscard]] bool is_right_lcd(const EpCode& c);
[[nodiscard]] bool is_left_self_dual(const EpCode& c);
[[nodiscard]] bool is_right_self_dual(const EpCode& c);
[[nodiscard]] bool is_self_dual(const EpCode& c);
}  // namespace by_definition

/// d(C) = d(Tor C); nullopt for the zero code.
[[nodiscard]] std::optional<std::size_t> min_distance(const EpCode& c);
/// MDS iff log_p|C| = 2(n - d + 1), AMDS iff log_p|C| = 2(n - d). Zero code: Neither.
[[nodiscard]] MdsStatus mds_status_ep(const EpCode& c);

/// Rows r·(RREF basis of R) followed by t·(RREF basis of the complement of R
/// in T that vanishes on the pivot columns of R).
[[nodiscard]] EpGenMatrix canonical_generator_matrix(const EpCode& c);

/// Text format: a header line `p=<prime> n=<length>`, then one row per line with
/// whitespace-separated ring tokens. `#` starts a comment.
[[nodiscard]] EpGenMatrix parse_gen_matrix(std::string_view text);
[[nodiscard]] std::string format_gen_matrix(const EpGenMatrix& g);
/// Rows only, one per line.
[[nodiscard]] std::string format_rows(const EpGenMatrix& g);

}  // namespace epc
