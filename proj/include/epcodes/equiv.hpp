#pragma once

// Monomial equivalence over F_p and E_p.
//
// Over E_p, right multiplication of a coordinate x by a scale entry e gives
// x e = alpha(e) x, so a monomial map acts on (R, T) through the F_p map
// (perm, alpha(scale)). All searches run on that reduction.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "epcodes/ep_code.hpp"
#include "epcodes/fp_linalg.hpp"

namespace epc {

/// x -> y with y[perm[i]] = scale[perm[i]] * x[i]: source coordinate i moves to
/// perm[i] and image coordinate j is multiplied by scale[j].
class MonomialMapFp {
 public:
  MonomialMapFp(unsigned p, std::vector<std::size_t> perm, std::vector<Digit> scale);
  static MonomialMapFp identity(unsigned p, std::size_t n);

  [[nodiscard]] unsigned modulus() const { return p_; }
  [[nodiscard]] std::size_t size() const { return perm_.size(); }
  [[nodiscard]] const std::vector<std::size_t>& perm() const { return perm_; }
  [[nodiscard]] const std::vector<Digit>& scale() const { return scale_; }

  [[nodiscard]] FpVec apply(const FpVec& x) const;
  [[nodiscard]] MonomialMapFp inverse() const;

  friend bool operator==(const MonomialMapFp&, const MonomialMapFp&) = default;

 private:
  unsigned p_;
  std::vector<std::size_t> perm_;
  std::vector<Digit> scale_;
};

/// after ∘ before.
[[nodiscard]] MonomialMapFp compose(const MonomialMapFp& after, const MonomialMapFp& before);
[[nodiscard]] FpCode apply_fp(const MonomialMapFp& m, const FpCode& c);

/// Monomial matrix over E_p; every scale entry lies outside the maximal ideal
/// (the right zero divisors of E_p).
class MonomialMapEp {
 public:
  /// Throws std::invalid_argument if a scale entry is a right zero divisor.
  MonomialMapEp(unsigned p, std::vector<std::size_t> perm, std::vector<EpElem> scale);
  /// The map M r for an F_p monomial matrix M.
  static MonomialMapEp lift(const MonomialMapFp& m);

  [[nodiscard]] unsigned modulus() const { return p_; }
  [[nodiscard]] std::size_t size() const { return perm_.size(); }
  [[nodiscard]] const std::vector<std::size_t>& perm() const { return perm_; }
  [[nodiscard]] const std::vector<EpElem>& scale() const { return scale_; }

  /// (perm, alpha(scale)).
  [[nodiscard]] MonomialMapFp reduce() const;
  /// x M, computed with ring multiplication.
  [[nodiscard]] EpVec apply(const EpVec& x) const;

  friend bool operator==(const MonomialMapEp&, const MonomialMapEp&) = default;

 private:
  unsigned p_;
  std::vector<std::size_t> perm_;
  std::vector<EpElem> scale_;
};

[[nodiscard]] MonomialMapEp compose(const MonomialMapEp& after, const MonomialMapEp& before);
[[nodiscard]] EpCode apply_ep(const MonomialMapEp& m, const EpCode& c);

/// A map sending c1 onto c2, if one exists. Returned witnesses are checked
/// before they are returned.
[[nodiscard]] std::optional<MonomialMapFp> equivalent_fp(const FpCode& c1, const FpCode& c2);
/// Free codes reduce to their residues; other codes are matched on (R, T) jointly.
[[nodiscard]] std::optional<MonomialMapEp> equivalent_ep(const EpCode& c1, const EpCode& c2);
/// The joint (R, T) search, used for every code regardless of freeness.
[[nodiscard]] std::optional<MonomialMapEp> equivalent_ep_joint(const EpCode& c1, const EpCode& c2);

/// Largest length for which canonical forms are computed, per prime.
struct CanonicalBudget {
  std::size_t max_n_binary = 10;
  std::size_t max_n_ternary = 6;
  std::size_t max_n_other = 4;

  [[nodiscard]] std::size_t max_n(unsigned p) const {
    return p == 2 ? max_n_binary : p == 3 ? max_n_ternary : max_n_other;
  }
};

struct CanonicalForm {
  std::string key;    // raw bytes
  MonomialMapFp map;  // sends the input onto its canonical image
};

/// Lexicographically least image, over the monomial group, of the column-major
/// serialization of RREF(R m) interleaved with RREF(T m) (columns of R's basis
/// before T's within each coordinate). Free codes serialize R only.
/// nullopt when the length exceeds the budget.
[[nodiscard]] std::optional<CanonicalForm> canonical_form(const EpCode& c, const CanonicalBudget& budget = {});
[[nodiscard]] std::optional<std::string> canonical_key(const EpCode& c, const CanonicalBudget& budget = {});
[[nodiscard]] std::optional<CanonicalForm> canonical_form_fp(const FpCode& c, const CanonicalBudget& budget = {});
[[nodiscard]] std::optional<std::string> canonical_key_fp(const FpCode& c, const CanonicalBudget& budget = {});

[[nodiscard]] std::string to_hex(std::string_view bytes);

}  // namespace epc
