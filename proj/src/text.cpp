#include "cubit/text.hpp"

#include <algorithm>
#include <string>

#include "cubit/error.hpp"

namespace cubit {
namespace {

bool all_digits(std::string_view s) {
  return !s.empty() &&
         std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

[[noreturn]] void fail(std::string_view text, std::string_view why) {
  throw ParseError("cannot parse quantity '" + std::string(text) + "': " +
                   std::string(why));
}

BigInt digits_to_int(std::string_view s) { return BigInt(std::string(s), 10); }

// INT := ["-"] DIGITS
bool split_int(std::string_view s, bool& negative, std::string_view& digits) {
  negative = !s.empty() && s.front() == '-';
  digits = negative ? s.substr(1) : s;
  return all_digits(digits);
}

Rational parse_fraction(std::string_view whole_text, std::string_view s,
                        bool allow_sign) {
  const auto slash = s.find('/');
  const std::string_view num_text = s.substr(0, slash);
  const std::string_view den_text = s.substr(slash + 1);
  bool negative = false;
  std::string_view num_digits;
  if (!split_int(num_text, negative, num_digits)) fail(whole_text, "bad numerator");
  if (negative && !allow_sign) fail(whole_text, "sign inside a mixed number");
  if (!all_digits(den_text)) fail(whole_text, "bad denominator");
  BigInt den = digits_to_int(den_text);
  if (den == 0) fail(whole_text, "zero denominator");
  BigInt num = digits_to_int(num_digits);
  if (negative) num = -num;
  return Rational(num, den);
}

Rational parse_decimal(std::string_view whole_text, std::string_view s) {
  const auto sep = s.find_first_of(".,");
  bool negative = false;
  std::string_view int_digits;
  if (!split_int(s.substr(0, sep), negative, int_digits)) {
    fail(whole_text, "bad integer part");
  }
  BigInt num = digits_to_int(int_digits);
  BigInt den = 1;
  if (sep != std::string_view::npos) {
    const std::string_view frac = s.substr(sep + 1);
    if (!all_digits(frac)) fail(whole_text, "bad fractional digits");
    for (char c : frac) {
      num = num * 10 + (c - '0');
      den *= 10;
    }
  }
  if (negative) num = -num;
  return Rational(num, den);
}

}  // namespace

Rational parse_quantity(std::string_view text) {
  if (text.empty()) fail(text, "empty");
  const auto space = text.find(' ');
  if (space != std::string_view::npos) {
    const std::string_view whole = text.substr(0, space);
    const std::string_view frac = text.substr(space + 1);
    if (!all_digits(whole)) fail(text, "bad whole part");
    if (frac.find('/') == std::string_view::npos) fail(text, "expected p/q after whole part");
    return Rational(digits_to_int(whole)) + parse_fraction(text, frac, false);
  }
  if (text.find('/') != std::string_view::npos) {
    return parse_fraction(text, text, true);
  }
  return parse_decimal(text, text);
}

std::string format_rational(const Rational& r, FormatStyle style) {
  switch (style.style) {
    case RationalStyle::Fraction:
      return r.numerator().get_str() + "/" + r.denominator().get_str();

    case RationalStyle::Mixed: {
      if (r.is_integer()) return r.numerator().get_str();
      // Negative non-integers have no MIXED form in the grammar; emit p/q.
      if (r.sign() < 0) return format_rational(r, FormatStyle::fraction());
      const BigInt whole = r.floor();
      const Rational frac = r.fractional_part();
      const std::string frac_text =
          frac.numerator().get_str() + "/" + frac.denominator().get_str();
      if (whole == 0) return frac_text;
      return whole.get_str() + " " + frac_text;
    }

    case RationalStyle::Decimal: {
      const int digits = std::max(style.digits, 0);
      BigInt scale = 1;
      for (int i = 0; i < digits; ++i) scale *= 10;
      // round(|r| * scale) half away from zero
      const Rational scaled = r.abs() * Rational(scale) + Rational(1, 2);
      const BigInt n = scaled.floor();
      std::string body = n.get_str();
      if (digits > 0) {
        if (body.size() <= static_cast<std::size_t>(digits)) {
          body.insert(0, static_cast<std::size_t>(digits) + 1 - body.size(), '0');
        }
        body.insert(body.size() - static_cast<std::size_t>(digits), ".");
      }
      return (r.sign() < 0 && n != 0 ? "-" : "") + body;
    }
  }
  return {};
}

}  // namespace cubit
