#pragma once

// Exact linear algebra over a small prime field F_p and the code-theoretic
// primitives built on it. Entries are stored one byte per coordinate.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace epc {

using Digit = std::uint8_t;

/// Largest prime accepted as a field modulus.
inline constexpr unsigned kMaxModulus = 13;

[[nodiscard]] bool is_prime(unsigned p);

/// Throws ModulusError unless p is a prime no larger than kMaxModulus.
void require_prime(unsigned p);

namespace fp {

[[nodiscard]] constexpr unsigned add(unsigned a, unsigned b, unsigned p) {
  const unsigned s = a + b;
  return s >= p ? s - p : s;
}
[[nodiscard]] constexpr unsigned sub(unsigned a, unsigned b, unsigned p) { return a >= b ? a - b : a + p - b; }
[[nodiscard]] constexpr unsigned neg(unsigned a, unsigned p) { return a == 0 ? 0 : p - a; }
[[nodiscard]] constexpr unsigned mul(unsigned a, unsigned b, unsigned p) { return (a * b) % p; }
[[nodiscard]] unsigned inv(unsigned a, unsigned p);
/// Reduces any integer, including negatives, into [0, p).
[[nodiscard]] constexpr unsigned reduce(long long v, unsigned p) {
  const long long m = v % static_cast<long long>(p);
  return static_cast<unsigned>(m < 0 ? m + p : m);
}

}  // namespace fp

class FpScalar {
 public:
  FpScalar(long long value, unsigned p);

  [[nodiscard]] unsigned value() const { return value_; }
  [[nodiscard]] unsigned modulus() const { return modulus_; }

  [[nodiscard]] FpScalar operator+(FpScalar o) const;
  [[nodiscard]] FpScalar operator-(FpScalar o) const;
  [[nodiscard]] FpScalar operator*(FpScalar o) const;
  [[nodiscard]] FpScalar operator-() const;
  /// Throws std::domain_error for zero.
  [[nodiscard]] FpScalar inverse() const;

  friend bool operator==(const FpScalar&, const FpScalar&) = default;

 private:
  Digit value_;
  Digit modulus_;
};

class FpVec {
 public:
  FpVec(unsigned p, std::size_t n);
  /// Throws ModulusError if an entry is not below p.
  FpVec(unsigned p, std::vector<Digit> entries);
  /// Convenience constructor; values are reduced mod p.
  static FpVec of(unsigned p, std::initializer_list<long long> values);
  static FpVec unit(unsigned p, std::size_t n, std::size_t j);

  [[nodiscard]] unsigned modulus() const { return p_; }
  [[nodiscard]] std::size_t size() const { return entries_.size(); }
  [[nodiscard]] Digit operator[](std::size_t j) const { return entries_[j]; }
  [[nodiscard]] std::span<const Digit> entries() const { return entries_; }
  void set(std::size_t j, unsigned value);

  [[nodiscard]] std::size_t weight() const;
  [[nodiscard]] bool is_zero() const;
  [[nodiscard]] FpVec operator+(const FpVec& o) const;
  [[nodiscard]] FpVec operator-(const FpVec& o) const;
  [[nodiscard]] FpVec scaled(unsigned c) const;
  [[nodiscard]] unsigned dot(const FpVec& o) const;

  friend auto operator<=>(const FpVec&, const FpVec&) = default;
  friend bool operator==(const FpVec&, const FpVec&) = default;

 private:
  unsigned p_;
  std::vector<Digit> entries_;
};

/// Dense row-major matrix over F_p.
class FpMat {
 public:
  FpMat(unsigned p, std::size_t rows, std::size_t cols);
  /// Throws ShapeError on ragged rows and ModulusError on mixed moduli.
  static FpMat from_rows(unsigned p, std::size_t cols, const std::vector<FpVec>& rows);
  static FpMat identity(unsigned p, std::size_t n);

  [[nodiscard]] unsigned modulus() const { return p_; }
  [[nodiscard]] std::size_t rows() const { return rows_; }
  [[nodiscard]] std::size_t cols() const { return cols_; }
  [[nodiscard]] Digit at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  void set(std::size_t i, std::size_t j, unsigned value);
  [[nodiscard]] std::span<const Digit> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }
  [[nodiscard]] FpVec row_vec(std::size_t i) const;
  [[nodiscard]] std::vector<FpVec> row_vecs() const;
  [[nodiscard]] std::span<const Digit> data() const { return data_; }

  [[nodiscard]] FpMat transpose() const;
  [[nodiscard]] FpMat operator*(const FpMat& o) const;
  /// Rows of `this` followed by rows of `o`.
  [[nodiscard]] FpMat stacked(const FpMat& o) const;

  friend bool operator==(const FpMat&, const FpMat&) = default;

 private:
  unsigned p_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Digit> data_;
};

struct RrefResult {
  FpMat matrix;  // zero rows dropped
  std::size_t rank;
  std::vector<std::size_t> pivots;  // ascending
};

[[nodiscard]] RrefResult rref(const FpMat& m);
[[nodiscard]] std::size_t rank(const FpMat& m);
/// G * G^T.
[[nodiscard]] FpMat gram_matrix(const FpMat& g);
/// Determinant of a square matrix by elimination.
[[nodiscard]] unsigned determinant(const FpMat& m);

/// A linear code over F_p, held by its reduced row-echelon basis. Two codes
/// are equal exactly when their bases are identical.
class FpCode {
 public:
  static FpCode span_of(const FpMat& generators);
  static FpCode span_of(unsigned p, std::size_t n, const std::vector<FpVec>& generators);
  static FpCode zero(unsigned p, std::size_t n);
  static FpCode full(unsigned p, std::size_t n);
  /// Trusts that `basis` is already in reduced row-echelon form with the given pivots.
  static FpCode from_rref(FpMat basis, std::vector<std::size_t> pivots);

  [[nodiscard]] unsigned modulus() const { return basis_.modulus(); }
  [[nodiscard]] std::size_t length() const { return basis_.cols(); }
  [[nodiscard]] std::size_t dimension() const { return basis_.rows(); }
  [[nodiscard]] bool is_zero() const { return basis_.rows() == 0; }
  [[nodiscard]] const FpMat& basis() const { return basis_; }
  [[nodiscard]] const std::vector<std::size_t>& pivots() const { return pivots_; }

  [[nodiscard]] bool contains(const FpVec& v) const;
  [[nodiscard]] bool contains(const FpCode& sub) const;
  /// Message-to-codeword map: sum of message[i] * basis row i.
  [[nodiscard]] FpVec encode(std::span<const unsigned> message) const;

  friend bool operator==(const FpCode& a, const FpCode& b) { return a.basis_ == b.basis_; }

 private:
  FpCode(FpMat basis, std::vector<std::size_t> pivots) : basis_(std::move(basis)), pivots_(std::move(pivots)) {}

  FpMat basis_;
  std::vector<std::size_t> pivots_;
};

/// Visits every codeword (p^k of them, starting with zero) as a span of digits.
/// Consecutive codewords differ by adding one basis row.
template <class Visitor>
void for_each_codeword(const FpCode& code, Visitor&& visit) {
  const unsigned p = code.modulus();
  const std::size_t n = code.length();
  const std::size_t k = code.dimension();
  std::vector<Digit> word(n, 0);
  std::vector<unsigned> digits(k, 0);
  const FpMat& g = code.basis();
  while (true) {
    visit(std::span<const Digit>(word));
    std::size_t i = 0;
    for (; i < k; ++i) {
      const auto row = g.row(i);
      for (std::size_t j = 0; j < n; ++j) word[j] = static_cast<Digit>(fp::add(word[j], row[j], p));
      if (++digits[i] < p) break;
      digits[i] = 0;
    }
    if (i == k) return;
  }
}

[[nodiscard]] FpCode dual_code(const FpCode& c);
[[nodiscard]] FpCode code_sum(const FpCode& a, const FpCode& b);
[[nodiscard]] FpCode code_intersection(const FpCode& a, const FpCode& b);

/// dim(C ∩ C^⊥).
[[nodiscard]] std::size_t hull_dim(const FpCode& c);
/// Gram-matrix test: the code is LCD iff G G^T is nonsingular. The zero code is LCD.
[[nodiscard]] bool is_lcd_fp(const FpCode& c);
/// Minimum nonzero weight by exhaustive enumeration; nullopt for the zero code.
[[nodiscard]] std::optional<std::size_t> min_distance_fp(const FpCode& c);
/// W_0..W_n.
[[nodiscard]] std::vector<std::uint64_t> weight_enumerator_fp(const FpCode& c);
[[nodiscard]] bool is_self_orthogonal_fp(const FpCode& c);
[[nodiscard]] bool is_self_dual_fp(const FpCode& c);

enum class MdsStatus { Mds, Amds, Neither };

[[nodiscard]] std::string_view to_string(MdsStatus s);

/// Singleton classification of a code of length n and distance d whose size is
/// q^size_exponent over an alphabet of size q.
[[nodiscard]] MdsStatus singleton_status(std::size_t n, std::size_t d, std::size_t size_exponent);
/// Zero code reports Neither.
[[nodiscard]] MdsStatus mds_status_fp(const FpCode& c);

}  // namespace epc
