#include "cubit/egyptian.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <string>

#include "cubit/error.hpp"
#include "cubit/text.hpp"

namespace cubit {
namespace {

void require_nonnegative(const Rational& r) {
  if (r.sign() < 0) {
    throw PreconditionError("cannot decompose a negative value: " + to_fraction(r));
  }
}

// ceil(a / b) for positive a, b
BigInt ceil_div(const BigInt& a, const BigInt& b) {
  BigInt q;
  mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

void greedy_into(Rational rem, std::vector<BigInt>& out) {
  while (!rem.is_zero()) {
    const BigInt d = ceil_div(rem.denominator(), rem.numerator());
    out.push_back(d);
    rem -= Rational(BigInt(1), d);
  }
}

bool is_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) {
    return std::isdigit(c) != 0;
  });
}

[[noreturn]] void malformed(std::string_view text, const std::string& why) {
  throw ParseError("bad unit-fraction notation '" + std::string(text) + "': " + why);
}

}  // namespace

Rational UnitFractionSum::value() const {
  Rational v(whole);
  if (has_two_thirds) v += Rational(2, 3);
  for (const BigInt& d : unit_denominators) v += Rational(BigInt(1), d);
  return v;
}

UnitFractionSum greedy_decompose(const Rational& r) {
  require_nonnegative(r);
  UnitFractionSum s;
  s.whole = r.floor();
  greedy_into(r.fractional_part(), s.unit_denominators);
  return s;
}

UnitFractionSum egyptian_decompose(const Rational& r, bool use_two_thirds) {
  require_nonnegative(r);
  const Rational frac = r.fractional_part();
  if (!use_two_thirds || frac < Rational(2, 3)) return greedy_decompose(r);
  UnitFractionSum s;
  s.whole = r.floor();
  s.has_two_thirds = true;
  greedy_into(frac - Rational(2, 3), s.unit_denominators);
  return s;
}

std::vector<int> horus_decompose(const Rational& r) {
  if (r.sign() < 0 || r >= Rational(1)) {
    throw NotDyadic(to_fraction(r) + " is outside [0, 1)");
  }
  const Rational scaled = r * 64;
  if (!scaled.is_integer()) {
    throw NotDyadic(to_fraction(r) + " is not a multiple of 1/64");
  }
  const long k = scaled.numerator().get_si();
  std::vector<int> out;
  for (int bit = 5; bit >= 0; --bit) {
    if (k & (1L << bit)) out.push_back(64 >> bit);
  }
  return out;
}

std::string render(const UnitFractionSum& s) {
  std::vector<std::string> terms;
  if (s.whole != 0) terms.push_back(s.whole.get_str());
  if (s.has_two_thirds) terms.emplace_back("2/3");
  for (const BigInt& d : s.unit_denominators) terms.push_back("1/" + d.get_str());
  if (terms.empty()) return "0";
  std::string out = terms.front();
  for (std::size_t i = 1; i < terms.size(); ++i) out += " " + terms[i];
  return out;
}

UnitFractionSum parse_notation(std::string_view text) {
  if (text.empty()) malformed(text, "empty");
  std::vector<std::string_view> tokens;
  std::size_t start = 0;
  while (true) {
    const auto sp = text.find(' ', start);
    tokens.push_back(text.substr(start, sp - start));
    if (sp == std::string_view::npos) break;
    start = sp + 1;
  }

  UnitFractionSum s;
  std::size_t i = 0;
  if (is_digits(tokens[0])) {
    s.whole = BigInt(std::string(tokens[0]), 10);
    ++i;
  }
  if (i < tokens.size() && tokens[i] == "2/3") {
    s.has_two_thirds = true;
    ++i;
  }
  for (; i < tokens.size(); ++i) {
    const std::string_view tok = tokens[i];
    if (tok == "2/3") malformed(text, "2/3 must precede the unit fractions");
    if (tok.substr(0, 2) != "1/" || !is_digits(tok.substr(2))) {
      malformed(text, "expected a unit fraction 1/d, got '" + std::string(tok) + "'");
    }
    BigInt d(std::string(tok.substr(2)), 10);
    if (d < 2) malformed(text, "unit denominator must be at least 2");
    if (!s.unit_denominators.empty() && d <= s.unit_denominators.back()) {
      malformed(text, d == s.unit_denominators.back()
                          ? "repeated denominator " + d.get_str()
                          : "denominators must ascend");
    }
    s.unit_denominators.push_back(std::move(d));
  }
  return s;
}

}  // namespace cubit
