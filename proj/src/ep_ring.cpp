#include "epcodes/ep_ring.hpp"

#include <cctype>
#include <string>

#include "epcodes/errors.hpp"

namespace epc {

namespace {

void require_same(const EpElem& x, const EpElem& y) {
  if (x.modulus() != y.modulus())
    throw ModulusError("ring modulus mismatch: " + std::to_string(x.modulus()) + " vs " + std::to_string(y.modulus()));
}

}  // namespace

EpElem::EpElem(long long r_coeff, long long s_coeff, unsigned p) {
  require_prime(p);
  i_ = static_cast<Digit>(fp::reduce(r_coeff, p));
  j_ = static_cast<Digit>(fp::reduce(s_coeff, p));
  p_ = static_cast<Digit>(p);
}

EpElem EpElem::from_t_adic(unsigned u, unsigned v, unsigned p) {
  // u r + v (r + (p-1) s) = (u + v) r - v s
  return {static_cast<long long>(u) + v, -static_cast<long long>(v), p};
}

EpElem ep_add(const EpElem& x, const EpElem& y) {
  require_same(x, y);
  const unsigned p = x.modulus();
  return {fp::add(x.r_coeff(), y.r_coeff(), p), fp::add(x.s_coeff(), y.s_coeff(), p), p};
}

EpElem ep_neg(const EpElem& x) {
  const unsigned p = x.modulus();
  return {fp::neg(x.r_coeff(), p), fp::neg(x.s_coeff(), p), p};
}

EpElem ep_mul(const EpElem& x, const EpElem& y) {
  require_same(x, y);
  const unsigned p = x.modulus();
  const unsigned a = alpha(y).value();
  return {fp::mul(a, x.r_coeff(), p), fp::mul(a, x.s_coeff(), p), p};
}

FpScalar alpha(const EpElem& x) {
  return {static_cast<long long>(x.r_coeff()) + x.s_coeff(), x.modulus()};
}

TAdic t_adic(const EpElem& x) {
  const unsigned p = x.modulus();
  return {alpha(x), FpScalar(-static_cast<long long>(x.s_coeff()), p)};
}

EpElem scalar_action(FpScalar u, const EpElem& x) {
  if (u.modulus() != x.modulus()) throw ModulusError("scalar and ring element use different moduli");
  const unsigned p = x.modulus();
  return {fp::mul(u.value(), x.r_coeff(), p), fp::mul(u.value(), x.s_coeff(), p), p};
}

bool in_max_ideal(const EpElem& x) { return alpha(x).value() == 0; }

std::vector<EpElem> ring_elements(unsigned p) {
  require_prime(p);
  std::vector<EpElem> out;
  out.reserve(p * p);
  for (unsigned i = 0; i < p; ++i)
    for (unsigned j = 0; j < p; ++j) out.emplace_back(i, j, p);
  return out;
}

namespace {

std::string term(unsigned c, char symbol) {
  std::string s = c == 1 ? std::string() : std::to_string(c);
  s.push_back(symbol);
  return s;
}

}  // namespace

std::string format_elem(const EpElem& x) {
  const unsigned p = x.modulus();
  const unsigned i = x.r_coeff();
  const unsigned j = x.s_coeff();
  if (i == 0 && j == 0) return "0";
  if (j == 0) return term(i, 'r');
  if (i == 0) return term(j, 's');
  if (j == fp::neg(i, p)) return term(i, 't');
  return term(i, 'r') + "+" + term(j, 's');
}

EpElem parse_elem(std::string_view token, unsigned p) {
  require_prime(p);
  if (token.empty()) throw ParseError("empty ring element", 0, 0);
  if (token == "0") return EpElem::zero(p);

  EpElem acc = EpElem::zero(p);
  std::size_t pos = 0;
  while (true) {
    const std::size_t start = pos;
    unsigned coeff = 1;
    if (pos < token.size() && std::isdigit(static_cast<unsigned char>(token[pos]))) {
      unsigned long value = 0;
      while (pos < token.size() && std::isdigit(static_cast<unsigned char>(token[pos]))) {
        value = value * 10 + static_cast<unsigned long>(token[pos] - '0');
        if (value > 1000) break;
        ++pos;
      }
      if (value == 0 || value >= p)
        throw ParseError("coefficient must lie in 1.." + std::to_string(p - 1) + " in '" + std::string(token) + "'", 0,
                         start + 1);
      coeff = static_cast<unsigned>(value);
    }
    if (pos >= token.size())
      throw ParseError("expected r, s or t in '" + std::string(token) + "'", 0, pos + 1);
    EpElem base = EpElem::zero(p);
    switch (token[pos]) {
      case 'r': base = EpElem::r(p); break;
      case 's': base = EpElem::s(p); break;
      case 't': base = EpElem::t(p); break;
      default:
        throw ParseError("unexpected character '" + std::string(1, token[pos]) + "' in '" + std::string(token) + "'", 0,
                         pos + 1);
    }
    ++pos;
    acc = acc + scalar_action(FpScalar(coeff, p), base);
    if (pos == token.size()) return acc;
    if (token[pos] != '+')
      throw ParseError("expected '+' in '" + std::string(token) + "'", 0, pos + 1);
    ++pos;
  }
}

}  // namespace epc
