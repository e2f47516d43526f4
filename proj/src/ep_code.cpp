#include "epcodes/ep_code.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>
#include <string>

#include "epcodes/errors.hpp"

namespace epc {

// EpVec

EpVec::EpVec(unsigned p, std::vector<EpElem> entries) : p_(p), entries_(std::move(entries)) {
  require_prime(p);
  for (const auto& e : entries_)
    if (e.modulus() != p) throw ModulusError("ring element modulus differs from vector modulus");
}

EpVec EpVec::from_t_adic(const FpVec& a, const FpVec& b) {
  if (a.modulus() != b.modulus()) throw ModulusError("modulus mismatch");
  if (a.size() != b.size()) throw ShapeError("component length mismatch");
  const unsigned p = a.modulus();
  std::vector<EpElem> e;
  e.reserve(a.size());
  for (std::size_t j = 0; j < a.size(); ++j) e.push_back(EpElem::from_t_adic(a[j], b[j], p));
  return {p, std::move(e)};
}

FpVec EpVec::r_part() const {
  FpVec v(p_, size());
  for (std::size_t j = 0; j < size(); ++j) v.set(j, t_adic(entries_[j]).u.value());
  return v;
}

FpVec EpVec::t_part() const {
  FpVec v(p_, size());
  for (std::size_t j = 0; j < size(); ++j) v.set(j, t_adic(entries_[j]).v.value());
  return v;
}

std::size_t EpVec::weight() const {
  return static_cast<std::size_t>(
      std::count_if(entries_.begin(), entries_.end(), [](const EpElem& e) { return !e.is_zero(); }));
}

// EpGenMatrix

EpGenMatrix::EpGenMatrix(unsigned p, std::size_t n, std::vector<EpVec> rows) : p_(p), n_(n), rows_(std::move(rows)) {
  require_prime(p);
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (rows_[i].modulus() != p) throw ModulusError("row " + std::to_string(i + 1) + " uses a different modulus");
    if (rows_[i].size() != n)
      throw ShapeError("row " + std::to_string(i + 1) + " has " + std::to_string(rows_[i].size()) + " entries, expected " +
                       std::to_string(n));
  }
}

// EpCode

EpCode::EpCode(FpCode residue, FpCode torsion) : residue_(std::move(residue)), torsion_(std::move(torsion)) {
  if (residue_.modulus() != torsion_.modulus()) throw ModulusError("residue and torsion moduli differ");
  if (residue_.length() != torsion_.length()) throw ShapeError("residue and torsion lengths differ");
  if (!torsion_.contains(residue_)) throw std::invalid_argument("residue code is not contained in torsion code");
}

EpCode EpCode::zero(unsigned p, std::size_t n) { return {FpCode::zero(p, n), FpCode::zero(p, n)}; }
EpCode EpCode::full(unsigned p, std::size_t n) { return {FpCode::full(p, n), FpCode::full(p, n)}; }
EpCode EpCode::torsion_space(unsigned p, std::size_t n) { return {FpCode::zero(p, n), FpCode::full(p, n)}; }
EpCode EpCode::free_code(const FpCode& d) { return {d, d}; }

bool EpCode::contains(const EpVec& x) const {
  return residue_.contains(x.r_part()) && torsion_.contains(x.t_part());
}

EpCode code_from_generators(const EpGenMatrix& g) {
  const unsigned p = g.modulus();
  const std::size_t n = g.length();
  std::vector<FpVec> a_parts;
  std::vector<FpVec> all_parts;
  for (const auto& row : g.rows()) {
    a_parts.push_back(row.r_part());
    all_parts.push_back(row.r_part());
    all_parts.push_back(row.t_part());
  }
  return {FpCode::span_of(p, n, a_parts), FpCode::span_of(p, n, all_parts)};
}

EpCode left_dual(const EpCode& c) {
  auto d = dual_code(c.residue());
  return {d, d};
}

EpCode right_dual(const EpCode& c) {
  return {dual_code(c.torsion()), FpCode::full(c.modulus(), c.length())};
}

EpCode intersect(const EpCode& a, const EpCode& b) {
  if (a.length() != b.length()) throw ShapeError("code length mismatch");
  if (a.modulus() != b.modulus()) throw ModulusError("modulus mismatch");
  return {code_intersection(a.residue(), b.residue()), code_intersection(a.torsion(), b.torsion())};
}

bool is_left_nice(const EpCode& c) { return c.cardinality_exp() + left_dual(c).cardinality_exp() == 2 * c.length(); }

bool is_right_nice(const EpCode& c) { return c.cardinality_exp() + right_dual(c).cardinality_exp() == 2 * c.length(); }

bool is_lcd(const EpCode& c) { return c.is_free() && is_lcd_fp(c.residue()); }

bool is_left_self_dual(const EpCode& c) { return c.is_free() && is_self_dual_fp(c.residue()); }

bool is_right_self_dual(const EpCode& c) { return c.residue().is_zero() && c.torsion().dimension() == c.length(); }

bool is_self_dual(const EpCode& c) {
  return is_self_orthogonal_fp(c.residue()) && c.torsion() == dual_code(c.residue());
}

bool is_qsd(const EpCode& c) {
  const EpCode both = intersect(left_dual(c), right_dual(c));
  return c.cardinality_exp() == c.length() && intersect(c, both) == c;
}

namespace by_definition {

bool is_lcd(const EpCode& c) { return is_left_nice(c) && intersect(c, left_dual(c)).is_zero(); }

bool is_right_lcd(const EpCode& c) { return is_right_nice(c) && intersect(c, right_dual(c)).is_zero(); }

bool is_left_self_dual(const EpCode& c) { return c == left_dual(c); }

bool is_right_self_dual(const EpCode& c) { return c == right_dual(c); }

bool is_self_dual(const EpCode& c) { return c == intersect(left_dual(c), right_dual(c)); }

}  // namespace by_definition

std::optional<std::size_t> min_distance(const EpCode& c) { return min_distance_fp(c.torsion()); }

MdsStatus mds_status_ep(const EpCode& c) {
  const auto d = min_distance(c);
  if (!d) return MdsStatus::Neither;
  const std::size_t n = c.length();
  const std::size_t e = c.cardinality_exp();
  if (e == 2 * (n - *d + 1)) return MdsStatus::Mds;
  if (e == 2 * (n - *d)) return MdsStatus::Amds;
  return MdsStatus::Neither;
}

EpGenMatrix canonical_generator_matrix(const EpCode& c) {
  const unsigned p = c.modulus();
  const std::size_t n = c.length();
  const FpCode& r = c.residue();
  std::vector<EpVec> rows;
  const FpVec zero(p, n);
  for (std::size_t i = 0; i < r.dimension(); ++i) rows.push_back(EpVec::from_t_adic(r.basis().row_vec(i), zero));

  // Reduce each torsion basis vector against R; the reduced vectors vanish on
  // R's pivot columns and span a complement of R in T.
  std::vector<FpVec> reduced;
  for (std::size_t i = 0; i < c.torsion().dimension(); ++i) {
    FpVec v = c.torsion().basis().row_vec(i);
    for (std::size_t k = 0; k < r.dimension(); ++k) {
      const unsigned coeff = v[r.pivots()[k]];
      if (coeff != 0) v = v - r.basis().row_vec(k).scaled(coeff);
    }
    reduced.push_back(std::move(v));
  }
  const FpCode complement = FpCode::span_of(p, n, reduced);
  for (std::size_t i = 0; i < complement.dimension(); ++i)
    rows.push_back(EpVec::from_t_adic(zero, complement.basis().row_vec(i)));
  return {p, n, std::move(rows)};
}

// Text format

namespace {

struct Token {
  std::string_view text;
  std::size_t column;  // 1-based
};

std::vector<Token> split_tokens(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i >= line.size()) break;
    const std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    out.push_back({line.substr(start, i - start), start + 1});
  }
  return out;
}

std::size_t parse_header_value(const Token& tok, std::string_view key, std::size_t line) {
  const std::string_view v = tok.text.substr(key.size());
  if (v.empty()) throw ParseError("missing value after '" + std::string(key) + "'", line, tok.column + key.size());
  std::size_t value = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(v[i])))
      throw ParseError("expected a number in '" + std::string(tok.text) + "'", line, tok.column + key.size() + i);
    value = value * 10 + static_cast<std::size_t>(v[i] - '0');
    if (value > 1000000) throw ParseError("value too large in '" + std::string(tok.text) + "'", line, tok.column);
  }
  return value;
}

}  // namespace

EpGenMatrix parse_gen_matrix(std::string_view text) {
  std::optional<unsigned> p;
  std::optional<std::size_t> n;
  bool have_header = false;
  std::vector<EpVec> rows;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t eol = std::min(text.find('\n', pos), text.size());
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    const auto toks = split_tokens(line);
    if (toks.empty()) {
      if (eol == text.size()) break;
      continue;
    }

    if (!have_header) {
      for (const auto& tok : toks) {
        if (tok.text.starts_with("p=")) {
          p = static_cast<unsigned>(parse_header_value(tok, "p=", line_no));
        } else if (tok.text.starts_with("n=")) {
          n = parse_header_value(tok, "n=", line_no);
        } else {
          throw ParseError("unexpected header token '" + std::string(tok.text) + "' (expected p=<prime> n=<length>)",
                           line_no, tok.column);
        }
      }
      if (!p) throw ParseError("header is missing p=<prime>", line_no, 1);
      if (!n) throw ParseError("header is missing n=<length>", line_no, 1);
      if (*n == 0) throw ParseError("length must be positive", line_no, 1);
      require_prime(*p);
      have_header = true;
      continue;
    }

    if (toks.size() != *n)
      throw ShapeError("line " + std::to_string(line_no) + ": row has " + std::to_string(toks.size()) +
                       " entries, expected " + std::to_string(*n));
    std::vector<EpElem> entries;
    entries.reserve(toks.size());
    for (const auto& tok : toks) {
      try {
        entries.push_back(parse_elem(tok.text, *p));
      } catch (const ParseError& e) {
        const std::string msg = e.what();
        throw ParseError(msg, line_no, tok.column + (e.column() == 0 ? 0 : e.column() - 1));
      }
    }
    rows.emplace_back(*p, std::move(entries));
    if (eol == text.size()) break;
  }
  if (!have_header) throw ParseError("missing header line p=<prime> n=<length>", line_no, 1);
  return {*p, *n, std::move(rows)};
}

std::string format_rows(const EpGenMatrix& g) {
  std::ostringstream out;
  for (const auto& row : g.rows()) {
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (j) out << ' ';
      out << format_elem(row[j]);
    }
    out << '\n';
  }
  return out.str();
}

std::string format_gen_matrix(const EpGenMatrix& g) {
  return "p=" + std::to_string(g.modulus()) + " n=" + std::to_string(g.length()) + "\n" + format_rows(g);
}

}  // namespace epc
