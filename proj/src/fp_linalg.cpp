#include "epcodes/fp_linalg.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>

#include "epcodes/errors.hpp"

namespace epc {

bool is_prime(unsigned p) {
  if (p < 2) return false;
  for (unsigned d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

void require_prime(unsigned p) {
  if (!is_prime(p) || p > kMaxModulus)
    throw ModulusError("modulus " + std::to_string(p) + " is not a prime in [2, " + std::to_string(kMaxModulus) + "]");
}

namespace {

void require_same(unsigned p, unsigned q) {
  if (p != q) throw ModulusError("modulus mismatch: " + std::to_string(p) + " vs " + std::to_string(q));
}

}  // namespace

unsigned fp::inv(unsigned a, unsigned p) {
  if (a % p == 0) throw std::domain_error("zero has no inverse");
  for (unsigned x = 1; x < p; ++x)
    if (mul(a, x, p) == 1) return x;
  throw std::domain_error("no inverse");  // unreachable for prime p
}

// FpScalar

FpScalar::FpScalar(long long value, unsigned p) {
  require_prime(p);
  value_ = static_cast<Digit>(fp::reduce(value, p));
  modulus_ = static_cast<Digit>(p);
}

FpScalar FpScalar::operator+(FpScalar o) const {
  require_same(modulus_, o.modulus_);
  return {fp::add(value_, o.value_, modulus_), modulus_};
}

FpScalar FpScalar::operator-(FpScalar o) const {
  require_same(modulus_, o.modulus_);
  return {fp::sub(value_, o.value_, modulus_), modulus_};
}

FpScalar FpScalar::operator*(FpScalar o) const {
  require_same(modulus_, o.modulus_);
  return {fp::mul(value_, o.value_, modulus_), modulus_};
}

FpScalar FpScalar::operator-() const { return {fp::neg(value_, modulus_), modulus_}; }

FpScalar FpScalar::inverse() const { return {fp::inv(value_, modulus_), modulus_}; }

// FpVec

FpVec::FpVec(unsigned p, std::size_t n) : p_(p), entries_(n, 0) { require_prime(p); }

FpVec::FpVec(unsigned p, std::vector<Digit> entries) : p_(p), entries_(std::move(entries)) {
  require_prime(p);
  for (Digit d : entries_)
    if (d >= p) throw ModulusError("entry " + std::to_string(d) + " is not reduced mod " + std::to_string(p));
}

FpVec FpVec::of(unsigned p, std::initializer_list<long long> values) {
  std::vector<Digit> e;
  e.reserve(values.size());
  for (long long v : values) e.push_back(static_cast<Digit>(fp::reduce(v, p)));
  return {p, std::move(e)};
}

FpVec FpVec::unit(unsigned p, std::size_t n, std::size_t j) {
  FpVec v(p, n);
  v.set(j, 1);
  return v;
}

void FpVec::set(std::size_t j, unsigned value) { entries_.at(j) = static_cast<Digit>(value % p_); }

std::size_t FpVec::weight() const {
  return static_cast<std::size_t>(std::count_if(entries_.begin(), entries_.end(), [](Digit d) { return d != 0; }));
}

bool FpVec::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](Digit d) { return d == 0; });
}

FpVec FpVec::operator+(const FpVec& o) const {
  require_same(p_, o.p_);
  if (size() != o.size()) throw ShapeError("vector length mismatch");
  FpVec r(*this);
  for (std::size_t j = 0; j < size(); ++j) r.entries_[j] = static_cast<Digit>(fp::add(entries_[j], o.entries_[j], p_));
  return r;
}

FpVec FpVec::operator-(const FpVec& o) const {
  require_same(p_, o.p_);
  if (size() != o.size()) throw ShapeError("vector length mismatch");
  FpVec r(*this);
  for (std::size_t j = 0; j < size(); ++j) r.entries_[j] = static_cast<Digit>(fp::sub(entries_[j], o.entries_[j], p_));
  return r;
}

FpVec FpVec::scaled(unsigned c) const {
  FpVec r(*this);
  for (auto& e : r.entries_) e = static_cast<Digit>(fp::mul(e, c % p_, p_));
  return r;
}

unsigned FpVec::dot(const FpVec& o) const {
  require_same(p_, o.p_);
  if (size() != o.size()) throw ShapeError("vector length mismatch");
  unsigned s = 0;
  for (std::size_t j = 0; j < size(); ++j) s = (s + entries_[j] * o.entries_[j]) % p_;
  return s;
}

// FpMat

FpMat::FpMat(unsigned p, std::size_t rows, std::size_t cols) : p_(p), rows_(rows), cols_(cols), data_(rows * cols, 0) {
  require_prime(p);
}

FpMat FpMat::from_rows(unsigned p, std::size_t cols, const std::vector<FpVec>& rows) {
  FpMat m(p, rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    require_same(p, rows[i].modulus());
    if (rows[i].size() != cols)
      throw ShapeError("row " + std::to_string(i) + " has length " + std::to_string(rows[i].size()) + ", expected " +
                       std::to_string(cols));
    std::copy(rows[i].entries().begin(), rows[i].entries().end(), m.data_.begin() + static_cast<std::ptrdiff_t>(i * cols));
  }
  return m;
}

FpMat FpMat::identity(unsigned p, std::size_t n) {
  FpMat m(p, n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

void FpMat::set(std::size_t i, std::size_t j, unsigned value) {
  data_.at(i * cols_ + j) = static_cast<Digit>(value % p_);
}

FpVec FpMat::row_vec(std::size_t i) const {
  auto r = row(i);
  return {p_, std::vector<Digit>(r.begin(), r.end())};
}

std::vector<FpVec> FpMat::row_vecs() const {
  std::vector<FpVec> out;
  out.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out.push_back(row_vec(i));
  return out;
}

FpMat FpMat::transpose() const {
  FpMat t(p_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.data_[j * rows_ + i] = at(i, j);
  return t;
}

FpMat FpMat::operator*(const FpMat& o) const {
  require_same(p_, o.p_);
  if (cols_ != o.rows_) throw ShapeError("matrix product shape mismatch");
  FpMat r(p_, rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < o.cols_; ++j) {
      unsigned s = 0;
      for (std::size_t l = 0; l < cols_; ++l) s = (s + at(i, l) * o.at(l, j)) % p_;
      r.data_[i * o.cols_ + j] = static_cast<Digit>(s);
    }
  return r;
}

FpMat FpMat::stacked(const FpMat& o) const {
  require_same(p_, o.p_);
  if (cols_ != o.cols_) throw ShapeError("cannot stack matrices of different widths");
  FpMat r(p_, rows_ + o.rows_, cols_);
  std::copy(data_.begin(), data_.end(), r.data_.begin());
  std::copy(o.data_.begin(), o.data_.end(), r.data_.begin() + static_cast<std::ptrdiff_t>(data_.size()));
  return r;
}

// Elimination

RrefResult rref(const FpMat& m) {
  const unsigned p = m.modulus();
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::vector<Digit> a(m.data().begin(), m.data().end());
  auto cell = [&](std::size_t i, std::size_t j) -> Digit& { return a[i * cols + j]; };

  std::vector<std::size_t> pivots;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t piv = rank;
    while (piv < rows && cell(piv, c) == 0) ++piv;
    if (piv == rows) continue;
    if (piv != rank)
      std::swap_ranges(a.begin() + static_cast<std::ptrdiff_t>(piv * cols),
                       a.begin() + static_cast<std::ptrdiff_t>((piv + 1) * cols),
                       a.begin() + static_cast<std::ptrdiff_t>(rank * cols));
    const unsigned scale = fp::inv(cell(rank, c), p);
    for (std::size_t j = c; j < cols; ++j) cell(rank, j) = static_cast<Digit>(fp::mul(cell(rank, j), scale, p));
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == rank || cell(i, c) == 0) continue;
      const unsigned f = cell(i, c);
      for (std::size_t j = c; j < cols; ++j)
        cell(i, j) = static_cast<Digit>(fp::sub(cell(i, j), fp::mul(f, cell(rank, j), p), p));
    }
    pivots.push_back(c);
    ++rank;
  }

  FpMat out(p, rank, cols);
  for (std::size_t i = 0; i < rank; ++i)
    for (std::size_t j = 0; j < cols; ++j) out.set(i, j, cell(i, j));
  return {std::move(out), rank, std::move(pivots)};
}

std::size_t rank(const FpMat& m) { return rref(m).rank; }

FpMat gram_matrix(const FpMat& g) { return g * g.transpose(); }

unsigned determinant(const FpMat& m) {
  if (m.rows() != m.cols()) throw ShapeError("determinant of a non-square matrix");
  const unsigned p = m.modulus();
  const std::size_t n = m.rows();
  std::vector<Digit> a(m.data().begin(), m.data().end());
  unsigned det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && a[piv * n + c] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a[piv * n + j], a[c * n + j]);
      det = fp::neg(det, p);
    }
    det = fp::mul(det, a[c * n + c], p);
    const unsigned inv = fp::inv(a[c * n + c], p);
    for (std::size_t i = c + 1; i < n; ++i) {
      const unsigned f = fp::mul(a[i * n + c], inv, p);
      if (f == 0) continue;
      for (std::size_t j = c; j < n; ++j)
        a[i * n + j] = static_cast<Digit>(fp::sub(a[i * n + j], fp::mul(f, a[c * n + j], p), p));
    }
  }
  return det;
}

// FpCode

FpCode FpCode::span_of(const FpMat& generators) {
  auto r = rref(generators);
  return {std::move(r.matrix), std::move(r.pivots)};
}

FpCode FpCode::span_of(unsigned p, std::size_t n, const std::vector<FpVec>& generators) {
  return span_of(FpMat::from_rows(p, n, generators));
}

FpCode FpCode::zero(unsigned p, std::size_t n) { return {FpMat(p, 0, n), {}}; }

FpCode FpCode::full(unsigned p, std::size_t n) {
  std::vector<std::size_t> piv(n);
  for (std::size_t i = 0; i < n; ++i) piv[i] = i;
  return {FpMat::identity(p, n), std::move(piv)};
}

FpCode FpCode::from_rref(FpMat basis, std::vector<std::size_t> pivots) {
  if (pivots.size() != basis.rows()) throw ShapeError("pivot count does not match basis rows");
  return {std::move(basis), std::move(pivots)};
}

bool FpCode::contains(const FpVec& v) const {
  if (v.modulus() != modulus()) throw ModulusError("modulus mismatch");
  if (v.size() != length()) throw ShapeError("vector length does not match code length");
  const unsigned p = modulus();
  std::vector<Digit> w(v.entries().begin(), v.entries().end());
  for (std::size_t i = 0; i < pivots_.size(); ++i) {
    const unsigned c = w[pivots_[i]];
    if (c == 0) continue;
    const auto row = basis_.row(i);
    for (std::size_t j = 0; j < w.size(); ++j) w[j] = static_cast<Digit>(fp::sub(w[j], fp::mul(c, row[j], p), p));
  }
  return std::all_of(w.begin(), w.end(), [](Digit d) { return d == 0; });
}

bool FpCode::contains(const FpCode& sub) const {
  if (sub.length() != length()) throw ShapeError("code length mismatch");
  for (std::size_t i = 0; i < sub.dimension(); ++i)
    if (!contains(sub.basis_.row_vec(i))) return false;
  return true;
}

FpVec FpCode::encode(std::span<const unsigned> message) const {
  if (message.size() != dimension()) throw ShapeError("message length does not match code dimension");
  const unsigned p = modulus();
  FpVec out(p, length());
  for (std::size_t i = 0; i < message.size(); ++i) out = out + basis_.row_vec(i).scaled(message[i] % p);
  return out;
}

FpCode dual_code(const FpCode& c) {
  const unsigned p = c.modulus();
  const std::size_t n = c.length();
  const auto& piv = c.pivots();
  std::vector<bool> is_pivot(n, false);
  for (auto j : piv) is_pivot[j] = true;

  // One null-space vector per free column f: x_f = 1, x_{pivot_i} = -B[i][f].
  std::vector<FpVec> rows;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    FpVec x(p, n);
    x.set(f, 1);
    for (std::size_t i = 0; i < piv.size(); ++i) x.set(piv[i], fp::neg(c.basis().at(i, f), p));
    rows.push_back(std::move(x));
  }
  return FpCode::span_of(p, n, rows);
}

FpCode code_sum(const FpCode& a, const FpCode& b) { return FpCode::span_of(a.basis().stacked(b.basis())); }

FpCode code_intersection(const FpCode& a, const FpCode& b) {
  return dual_code(code_sum(dual_code(a), dual_code(b)));
}

std::size_t hull_dim(const FpCode& c) { return code_intersection(c, dual_code(c)).dimension(); }

bool is_lcd_fp(const FpCode& c) {
  if (c.is_zero()) return true;
  return determinant(gram_matrix(c.basis())) != 0;
}

std::optional<std::size_t> min_distance_fp(const FpCode& c) {
  if (c.is_zero()) return std::nullopt;
  std::size_t best = c.length();
  bool first = true;
  for_each_codeword(c, [&](std::span<const Digit> w) {
    if (first) {  // the zero word
      first = false;
      return;
    }
    const auto wt = static_cast<std::size_t>(std::count_if(w.begin(), w.end(), [](Digit d) { return d != 0; }));
    best = std::min(best, wt);
  });
  return best;
}

std::vector<std::uint64_t> weight_enumerator_fp(const FpCode& c) {
  std::vector<std::uint64_t> w(c.length() + 1, 0);
  for_each_codeword(c, [&](std::span<const Digit> word) {
    ++w[static_cast<std::size_t>(std::count_if(word.begin(), word.end(), [](Digit d) { return d != 0; }))];
  });
  return w;
}

bool is_self_orthogonal_fp(const FpCode& c) {
  const FpMat& g = c.basis();
  const FpMat gram = gram_matrix(g);
  return std::all_of(gram.data().begin(), gram.data().end(), [](Digit d) { return d == 0; });
}

bool is_self_dual_fp(const FpCode& c) { return 2 * c.dimension() == c.length() && is_self_orthogonal_fp(c); }

std::string_view to_string(MdsStatus s) {
  switch (s) {
    case MdsStatus::Mds: return "MDS";
    case MdsStatus::Amds: return "AMDS";
    case MdsStatus::Neither: return "NEITHER";
  }
  return "NEITHER";
}

MdsStatus singleton_status(std::size_t n, std::size_t d, std::size_t size_exponent) {
  if (size_exponent == n - d + 1) return MdsStatus::Mds;
  if (size_exponent == n - d) return MdsStatus::Amds;
  return MdsStatus::Neither;
}

MdsStatus mds_status_fp(const FpCode& c) {
  const auto d = min_distance_fp(c);
  if (!d) return MdsStatus::Neither;
  return singleton_status(c.length(), *d, c.dimension());
}

}  // namespace epc
