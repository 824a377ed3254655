#include "ramsey/rational.hpp"

#include <cctype>
#include <cstdlib>

#include "ramsey/errors.hpp"

namespace ramsey {

namespace {

long long parse_int(const std::string& s) {
  if (s.empty()) {
    throw ParseError(ParseError::Kind::bad_number, "empty number");
  }
  size_t pos = 0;
  long long value = 0;
  try {
    value = std::stoll(s, &pos);
  } catch (const std::exception&) {
    throw ParseError(ParseError::Kind::bad_number, "bad number '" + s + "'");
  }
  if (pos != s.size()) {
    throw ParseError(ParseError::Kind::bad_number, "bad number '" + s + "'");
  }
  return value;
}

}  // namespace

Rat parse_rational(const std::string& text) {
  auto slash = text.find('/');
  if (slash != std::string::npos) {
    long long num = parse_int(text.substr(0, slash));
    long long den = parse_int(text.substr(slash + 1));
    if (den == 0) {
      throw ParseError(ParseError::Kind::bad_number,
                       "zero denominator in '" + text + "'");
    }
    return Rat(num, den);
  }
  auto dot = text.find('.');
  if (dot == std::string::npos) {
    return Rat(parse_int(text));
  }
  std::string head = text.substr(0, dot);
  std::string tail = text.substr(dot + 1);
  if (tail.empty() || tail.size() > 15) {
    throw ParseError(ParseError::Kind::bad_number,
                     "bad decimal '" + text + "'");
  }
  for (char ch : tail) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) {
      throw ParseError(ParseError::Kind::bad_number,
                       "bad decimal '" + text + "'");
    }
  }
  bool negative = !head.empty() && head[0] == '-';
  if (head == "-" || head == "+" || head.empty()) {
    head += "0";
  }
  long long whole = parse_int(head);
  long long den = 1;
  for (size_t i = 0; i < tail.size(); ++i) den *= 10;
  long long frac = parse_int(tail);
  Rat magnitude = Rat(std::abs(whole)) + Rat(frac, den);
  return negative ? -magnitude : magnitude;
}

std::string format_rational(const Rat& r) {
  if (r.denominator() == 1) {
    return std::to_string(r.numerator());
  }
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

long long floor_rat(const Rat& r) {
  long long q = r.numerator() / r.denominator();
  if (r.numerator() % r.denominator() != 0 && r.numerator() < 0) --q;
  return q;
}

long long ceil_rat(const Rat& r) {
  long long q = r.numerator() / r.denominator();
  if (r.numerator() % r.denominator() != 0 && r.numerator() > 0) ++q;
  return q;
}

bool le_scaled_sqrt(const Rat& a, const Rat& c, const Rat& x) {
  if (a <= 0) return true;
  return a * a <= c * c * x;
}

bool ge_scaled_sqrt(const Rat& a, const Rat& c, const Rat& x) {
  if (a < 0) return false;
  return a * a >= c * c * x;
}

}  // namespace ramsey
