#include "epcodes/equiv.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>

#include "epcodes/errors.hpp"

namespace epc {

namespace {

void check_perm(const std::vector<std::size_t>& perm) {
  std::vector<bool> seen(perm.size(), false);
  for (auto d : perm) {
    if (d >= perm.size() || seen[d]) throw std::invalid_argument("not a permutation");
    seen[d] = true;
  }
}

std::vector<std::size_t> inverse_perm(const std::vector<std::size_t>& perm) {
  std::vector<std::size_t> inv(perm.size());
  for (std::size_t i = 0; i < perm.size(); ++i) inv[perm[i]] = i;
  return inv;
}

}  // namespace

// MonomialMapFp

MonomialMapFp::MonomialMapFp(unsigned p, std::vector<std::size_t> perm, std::vector<Digit> scale)
    : p_(p), perm_(std::move(perm)), scale_(std::move(scale)) {
  require_prime(p);
  if (perm_.size() != scale_.size()) throw ShapeError("permutation and scaling lengths differ");
  check_perm(perm_);
  for (auto s : scale_)
    if (s == 0 || s >= p) throw std::invalid_argument("monomial scale entries must be nonzero residues");
}

MonomialMapFp MonomialMapFp::identity(unsigned p, std::size_t n) {
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  return {p, std::move(perm), std::vector<Digit>(n, 1)};
}

FpVec MonomialMapFp::apply(const FpVec& x) const {
  if (x.size() != size()) throw ShapeError("map length does not match vector length");
  if (x.modulus() != p_) throw ModulusError("modulus mismatch");
  FpVec y(p_, size());
  for (std::size_t i = 0; i < size(); ++i) y.set(perm_[i], fp::mul(scale_[perm_[i]], x[i], p_));
  return y;
}

MonomialMapFp MonomialMapFp::inverse() const {
  // x[i] = scale[perm[i]]^-1 y[perm[i]]: inverse moves perm[i] -> i, scaling image i.
  const auto inv = inverse_perm(perm_);
  std::vector<Digit> s(size());
  for (std::size_t i = 0; i < size(); ++i) s[i] = static_cast<Digit>(fp::inv(scale_[perm_[i]], p_));
  return {p_, inv, std::move(s)};
}

MonomialMapFp compose(const MonomialMapFp& after, const MonomialMapFp& before) {
  if (after.size() != before.size()) throw ShapeError("map length mismatch");
  if (after.modulus() != before.modulus()) throw ModulusError("modulus mismatch");
  const unsigned p = after.modulus();
  const std::size_t n = after.size();
  const auto after_inv = inverse_perm(after.perm());
  std::vector<std::size_t> perm(n);
  std::vector<Digit> scale(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = after.perm()[before.perm()[i]];
  for (std::size_t k = 0; k < n; ++k)
    scale[k] = static_cast<Digit>(fp::mul(after.scale()[k], before.scale()[after_inv[k]], p));
  return {p, std::move(perm), std::move(scale)};
}

FpCode apply_fp(const MonomialMapFp& m, const FpCode& c) {
  if (m.size() != c.length()) throw ShapeError("map length does not match code length");
  std::vector<FpVec> rows;
  rows.reserve(c.dimension());
  for (std::size_t i = 0; i < c.dimension(); ++i) rows.push_back(m.apply(c.basis().row_vec(i)));
  return FpCode::span_of(c.modulus(), c.length(), rows);
}

// MonomialMapEp

MonomialMapEp::MonomialMapEp(unsigned p, std::vector<std::size_t> perm, std::vector<EpElem> scale)
    : p_(p), perm_(std::move(perm)), scale_(std::move(scale)) {
  require_prime(p);
  if (perm_.size() != scale_.size()) throw ShapeError("permutation and scaling lengths differ");
  check_perm(perm_);
  for (const auto& e : scale_) {
    if (e.modulus() != p) throw ModulusError("scale entry modulus mismatch");
    if (in_max_ideal(e)) throw std::invalid_argument("monomial scale entry " + format_elem(e) + " is a right zero divisor");
  }
}

MonomialMapEp MonomialMapEp::lift(const MonomialMapFp& m) {
  const unsigned p = m.modulus();
  std::vector<EpElem> scale;
  scale.reserve(m.size());
  for (auto s : m.scale()) scale.emplace_back(s, 0, p);
  return {p, m.perm(), std::move(scale)};
}

MonomialMapFp MonomialMapEp::reduce() const {
  std::vector<Digit> s;
  s.reserve(size());
  for (const auto& e : scale_) s.push_back(static_cast<Digit>(alpha(e).value()));
  return {p_, perm_, std::move(s)};
}

EpVec MonomialMapEp::apply(const EpVec& x) const {
  if (x.size() != size()) throw ShapeError("map length does not match vector length");
  std::vector<EpElem> y(size(), EpElem::zero(p_));
  for (std::size_t i = 0; i < size(); ++i) y[perm_[i]] = x[i] * scale_[perm_[i]];
  return {p_, std::move(y)};
}

MonomialMapEp compose(const MonomialMapEp& after, const MonomialMapEp& before) {
  if (after.size() != before.size()) throw ShapeError("map length mismatch");
  const std::size_t n = after.size();
  const auto after_inv = inverse_perm(after.perm());
  std::vector<std::size_t> perm(n);
  std::vector<EpElem> scale;
  scale.reserve(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = after.perm()[before.perm()[i]];
  for (std::size_t k = 0; k < n; ++k) scale.push_back(before.scale()[after_inv[k]] * after.scale()[k]);
  return {after.modulus(), std::move(perm), std::move(scale)};
}

EpCode apply_ep(const MonomialMapEp& m, const EpCode& c) {
  if (m.modulus() != c.modulus()) throw ModulusError("modulus mismatch");
  const MonomialMapFp f = m.reduce();
  return {apply_fp(f, c.residue()), apply_fp(f, c.torsion())};
}

// Column placement search

namespace {

struct Placement {
  std::size_t source;
  unsigned scale;
};

// Incremental RREF of the image of one basis under a partial assignment of
// source columns to the leading image columns. Rows [0, rank) are pivot rows;
// the remaining rows vanish on every placed column.
class ColumnState {
 public:
  explicit ColumnState(const FpMat& m)
      : p_(m.modulus()), rows_(m.rows()), cols_(m.cols()), w_(m.data().begin(), m.data().end()) {}

  [[nodiscard]] std::size_t rows() const { return rows_; }
  [[nodiscard]] bool full_rank() const { return rank_ == rows_; }

  // Image column produced by placing source column c, scaled by u, next.
  void peek(std::size_t c, unsigned u, Digit* out) const {
    for (std::size_t i = rank_; i < rows_; ++i) {
      if (cell(i, c) != 0) {
        std::fill(out, out + rows_, Digit{0});
        out[rank_] = 1;
        return;
      }
    }
    for (std::size_t i = 0; i < rank_; ++i) out[i] = static_cast<Digit>(fp::mul(u, cell(i, c), p_));
    std::fill(out + rank_, out + rows_, Digit{0});
  }

  // Scaled working column over every row. Two placements with equal
  // signatures lead to identical states.
  void signature(std::size_t c, unsigned u, Digit* out) const {
    for (std::size_t i = 0; i < rows_; ++i) out[i] = static_cast<Digit>(fp::mul(u, cell(i, c), p_));
  }

  void place(std::size_t c, unsigned u) {
    std::size_t piv = rank_;
    while (piv < rows_ && cell(piv, c) == 0) ++piv;
    if (piv == rows_) return;
    if (piv != rank_)
      for (std::size_t j = 0; j < cols_; ++j) std::swap(cell(piv, j), cell(rank_, j));
    const unsigned f = fp::inv(fp::mul(u, cell(rank_, c), p_), p_);
    for (std::size_t j = 0; j < cols_; ++j) cell(rank_, j) = static_cast<Digit>(fp::mul(f, cell(rank_, j), p_));
    // The pivot row now holds u^-1 at column c.
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i == rank_ || cell(i, c) == 0) continue;
      const unsigned g = fp::mul(cell(i, c), u, p_);
      for (std::size_t j = 0; j < cols_; ++j)
        cell(i, j) = static_cast<Digit>(fp::sub(cell(i, j), fp::mul(g, cell(rank_, j), p_), p_));
    }
    ++rank_;
  }

 private:
  [[nodiscard]] Digit cell(std::size_t i, std::size_t j) const { return w_[i * cols_ + j]; }
  Digit& cell(std::size_t i, std::size_t j) { return w_[i * cols_ + j]; }

  unsigned p_;
  std::size_t rows_;
  std::size_t cols_;
  std::size_t rank_ = 0;
  std::vector<Digit> w_;
};

using States = std::vector<ColumnState>;

struct Candidate {
  std::size_t source;
  unsigned scale;
  std::vector<Digit> column;
};

class PlacementSearch {
 public:
  PlacementSearch(unsigned p, std::size_t n, const std::vector<const FpMat*>& mats) : p_(p), n_(n) {
    for (const auto* m : mats) {
      initial_.emplace_back(*m);
      width_ += m->rows();
    }
  }

 protected:
  [[nodiscard]] static bool all_full_rank(const States& s) {
    return std::all_of(s.begin(), s.end(), [](const ColumnState& c) { return c.full_rank(); });
  }

  void peek(const States& states, std::size_t c, unsigned u, Digit* out) const {
    for (const auto& s : states) {
      s.peek(c, u, out);
      out += s.rows();
    }
  }

  // One candidate per distinct resulting state, in (source, scale) order.
  [[nodiscard]] std::vector<Candidate> candidates(const States& states, const std::vector<char>& used) const {
    std::vector<Candidate> out;
    std::vector<std::vector<Digit>> seen;
    std::vector<Digit> sig(width_);
    for (std::size_t c = 0; c < n_; ++c) {
      if (used[c]) continue;
      for (unsigned u = 1; u < p_; ++u) {
        Digit* o = sig.data();
        for (const auto& s : states) {
          s.signature(c, u, o);
          o += s.rows();
        }
        if (std::find(seen.begin(), seen.end(), sig) != seen.end()) continue;
        seen.push_back(sig);
        Candidate cand{c, u, std::vector<Digit>(width_)};
        peek(states, c, u, cand.column.data());
        out.push_back(std::move(cand));
      }
    }
    return out;
  }

  static States child(const States& states, std::size_t c, unsigned u) {
    States next = states;
    for (auto& s : next) s.place(c, u);
    return next;
  }

  unsigned p_;
  std::size_t n_;
  std::size_t width_ = 0;
  States initial_;
};

// Finds an assignment whose image equals a fixed target RREF.
class MatchSearch : PlacementSearch {
 public:
  MatchSearch(unsigned p, std::size_t n, const std::vector<const FpMat*>& source,
              const std::vector<const FpMat*>& target)
      : PlacementSearch(p, n, source) {
    target_.resize(n * width_);
    for (std::size_t j = 0; j < n; ++j) {
      std::size_t off = j * width_;
      for (const auto* m : target)
        for (std::size_t i = 0; i < m->rows(); ++i) target_[off++] = m->at(i, j);
    }
  }

  std::optional<std::vector<Placement>> run() {
    std::vector<char> used(n_, 0);
    assign_.assign(n_, {0, 1});
    if (visit(0, initial_, used)) return assign_;
    return std::nullopt;
  }

 private:
  bool visit(std::size_t depth, const States& states, std::vector<char>& used) {
    if (depth == n_) return true;
    const Digit* want = target_.data() + depth * width_;
    if (all_full_rank(states)) return complete(depth, states, used);
    for (const auto& cand : candidates(states, used)) {
      if (!std::equal(cand.column.begin(), cand.column.end(), want)) continue;
      used[cand.source] = 1;
      assign_[depth] = {cand.source, cand.scale};
      if (visit(depth + 1, child(states, cand.source, cand.scale), used)) return true;
      used[cand.source] = 0;
    }
    return false;
  }

  // With every row pivoted, remaining columns no longer interact; proportional
  // columns are interchangeable, so a greedy match is exact.
  bool complete(std::size_t depth, const States& states, std::vector<char>& used) {
    std::vector<Digit> col(width_);
    std::vector<char> taken = used;
    for (std::size_t j = depth; j < n_; ++j) {
      const Digit* want = target_.data() + j * width_;
      bool found = false;
      for (std::size_t c = 0; c < n_ && !found; ++c) {
        if (taken[c]) continue;
        for (unsigned u = 1; u < p_; ++u) {
          peek(states, c, u, col.data());
          if (std::equal(col.begin(), col.end(), want)) {
            taken[c] = 1;
            assign_[j] = {c, u};
            found = true;
            break;
          }
        }
      }
      if (!found) return false;
    }
    return true;
  }

  std::vector<Digit> target_;
  std::vector<Placement> assign_;
};

// Lexicographically least column-major image over all assignments.
class MinimalSearch : PlacementSearch {
 public:
  using PlacementSearch::PlacementSearch;

  std::pair<std::vector<Digit>, std::vector<Placement>> run() {
    std::vector<char> used(n_, 0);
    cur_.assign(n_ * width_, 0);
    cur_assign_.assign(n_, {0, 1});
    visit(0, initial_, used, true);
    return {best_, best_assign_};
  }

 private:
  void accept() {
    best_ = cur_;
    best_assign_ = cur_assign_;
    have_best_ = true;
    ++version_;
  }

  int compare_with_best(const Digit* col, std::size_t depth) const {
    const Digit* b = best_.data() + depth * width_;
    for (std::size_t i = 0; i < width_; ++i)
      if (col[i] != b[i]) return col[i] < b[i] ? -1 : 1;
    return 0;
  }

  // `less`: the current prefix is strictly below the best key's prefix (or no best exists yet).
  void visit(std::size_t depth, const States& states, std::vector<char>& used, bool less) {
    if (depth == n_) {
      if (less || !have_best_) accept();
      return;
    }
    if (all_full_rank(states)) {
      complete(depth, states, used, less);
      return;
    }
    auto cands = candidates(states, used);
    const auto& min_col =
        std::min_element(cands.begin(), cands.end(), [](const Candidate& a, const Candidate& b) {
          return a.column < b.column;
        })->column;
    const std::vector<Digit> best_col = min_col;
    bool child_less = less || !have_best_;
    if (!child_less) {
      const int cmp = compare_with_best(best_col.data(), depth);
      if (cmp > 0) return;
      child_less = cmp < 0;
    }
    const auto version = version_;
    for (const auto& cand : cands) {
      if (cand.column != best_col) continue;
      // A new best found below this node shares the prefix through `depth`.
      if (version_ != version) child_less = false;
      std::copy(best_col.begin(), best_col.end(), cur_.begin() + static_cast<std::ptrdiff_t>(depth * width_));
      cur_assign_[depth] = {cand.source, cand.scale};
      used[cand.source] = 1;
      visit(depth + 1, child(states, cand.source, cand.scale), used, child_less);
      used[cand.source] = 0;
    }
  }

  // Remaining columns are independent once every row is pivoted: the least
  // completion takes each column at its least scaling, in ascending order.
  void complete(std::size_t depth, const States& states, const std::vector<char>& used, bool less) {
    struct Tail {
      std::vector<Digit> column;
      Placement placement;
    };
    std::vector<Tail> tails;
    std::vector<Digit> col(width_);
    for (std::size_t c = 0; c < n_; ++c) {
      if (used[c]) continue;
      Tail t{std::vector<Digit>(width_), {c, 1}};
      peek(states, c, 1, t.column.data());
      for (unsigned u = 2; u < p_; ++u) {
        peek(states, c, u, col.data());
        if (col < t.column) {
          t.column = col;
          t.placement.scale = u;
        }
      }
      tails.push_back(std::move(t));
    }
    std::stable_sort(tails.begin(), tails.end(), [](const Tail& a, const Tail& b) { return a.column < b.column; });
    for (std::size_t j = depth; j < n_; ++j) {
      const auto& t = tails[j - depth];
      std::copy(t.column.begin(), t.column.end(), cur_.begin() + static_cast<std::ptrdiff_t>(j * width_));
      cur_assign_[j] = t.placement;
    }
    if (less || !have_best_) {
      accept();
      return;
    }
    for (std::size_t j = depth; j < n_; ++j) {
      const int cmp = compare_with_best(cur_.data() + j * width_, j);
      if (cmp < 0) {
        accept();
        return;
      }
      if (cmp > 0) return;
    }
  }

  std::vector<Digit> best_;
  std::vector<Placement> best_assign_;
  std::vector<Digit> cur_;
  std::vector<Placement> cur_assign_;
  bool have_best_ = false;
  unsigned long long version_ = 0;
};

MonomialMapFp to_map(unsigned p, const std::vector<Placement>& assign) {
  const std::size_t n = assign.size();
  std::vector<std::size_t> perm(n);
  std::vector<Digit> scale(n);
  for (std::size_t j = 0; j < n; ++j) {
    perm[assign[j].source] = j;
    scale[j] = static_cast<Digit>(assign[j].scale);
  }
  return {p, std::move(perm), std::move(scale)};
}

bool same_invariants(const FpCode& a, const FpCode& b) {
  return a.dimension() == b.dimension() && weight_enumerator_fp(a) == weight_enumerator_fp(b) &&
         weight_enumerator_fp(dual_code(a)) == weight_enumerator_fp(dual_code(b));
}

std::string key_header(char tag, const EpCode& c) {
  std::string h;
  h.push_back(tag);
  h.push_back(static_cast<char>(c.modulus()));
  const auto n = c.length();
  h.push_back(static_cast<char>(n >> 8));
  h.push_back(static_cast<char>(n & 0xff));
  h.push_back(static_cast<char>(c.residue().dimension()));
  h.push_back(static_cast<char>(c.torsion().dimension()));
  return h;
}

}  // namespace

std::optional<MonomialMapFp> equivalent_fp(const FpCode& c1, const FpCode& c2) {
  if (c1.modulus() != c2.modulus() || c1.length() != c2.length()) return std::nullopt;
  if (!same_invariants(c1, c2)) return std::nullopt;
  MatchSearch search(c1.modulus(), c1.length(), {&c1.basis()}, {&c2.basis()});
  auto assign = search.run();
  if (!assign) return std::nullopt;
  auto map = to_map(c1.modulus(), *assign);
  if (apply_fp(map, c1) != c2) throw std::logic_error("equivalence witness failed validation");
  return map;
}

std::optional<MonomialMapEp> equivalent_ep_joint(const EpCode& c1, const EpCode& c2) {
  if (c1.modulus() != c2.modulus() || c1.length() != c2.length()) return std::nullopt;
  if (c1.m1() != c2.m1() || c1.m2() != c2.m2()) return std::nullopt;
  if (weight_enumerator_fp(c1.residue()) != weight_enumerator_fp(c2.residue()) ||
      weight_enumerator_fp(c1.torsion()) != weight_enumerator_fp(c2.torsion()))
    return std::nullopt;
  MatchSearch search(c1.modulus(), c1.length(), {&c1.residue().basis(), &c1.torsion().basis()},
                     {&c2.residue().basis(), &c2.torsion().basis()});
  auto assign = search.run();
  if (!assign) return std::nullopt;
  auto map = MonomialMapEp::lift(to_map(c1.modulus(), *assign));
  if (apply_ep(map, c1) != c2) throw std::logic_error("equivalence witness failed validation");
  return map;
}

std::optional<MonomialMapEp> equivalent_ep(const EpCode& c1, const EpCode& c2) {
  if (c1.is_free() != c2.is_free()) return std::nullopt;
  if (!c1.is_free()) return equivalent_ep_joint(c1, c2);
  auto m = equivalent_fp(c1.residue(), c2.residue());
  if (!m) return std::nullopt;
  return MonomialMapEp::lift(*m);
}

std::optional<CanonicalForm> canonical_form(const EpCode& c, const CanonicalBudget& budget) {
  if (c.length() > budget.max_n(c.modulus())) return std::nullopt;
  std::vector<const FpMat*> mats{&c.residue().basis()};
  if (!c.is_free()) mats.push_back(&c.torsion().basis());
  MinimalSearch search(c.modulus(), c.length(), mats);
  auto [key, assign] = search.run();
  std::string bytes = key_header(c.is_free() ? 'F' : 'N', c);
  bytes.append(key.begin(), key.end());
  return CanonicalForm{std::move(bytes), to_map(c.modulus(), assign)};
}

std::optional<std::string> canonical_key(const EpCode& c, const CanonicalBudget& budget) {
  auto f = canonical_form(c, budget);
  if (!f) return std::nullopt;
  return std::move(f->key);
}

std::optional<CanonicalForm> canonical_form_fp(const FpCode& c, const CanonicalBudget& budget) {
  return canonical_form(EpCode::free_code(c), budget);
}

std::optional<std::string> canonical_key_fp(const FpCode& c, const CanonicalBudget& budget) {
  return canonical_key(EpCode::free_code(c), budget);
}

std::string to_hex(std::string_view bytes) {
  static constexpr char digits[] = "0123456789abcdef";
  std::string out;
  out.reserve(bytes.size() * 2);
  for (unsigned char b : bytes) {
    out.push_back(digits[b >> 4]);
    out.push_back(digits[b & 0xf]);
  }
  return out;
}

}  // namespace epc
