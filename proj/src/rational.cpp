#include "eggdrop/rational.hpp"

#include "eggdrop/errors.hpp"

#include <cmath>
#include <limits>

namespace eggdrop {

namespace {

using BigInt = boost::multiprecision::cpp_int;

Int narrow(const BigInt& v) {
  if (v > std::numeric_limits<Int>::max() || v < std::numeric_limits<Int>::min())
    throw OverflowError("rational value exceeds 64-bit range");
  return static_cast<Int>(v);
}

}  // namespace

Int floor_int(const Rational& r) {
  BigInt num = numerator(r);
  BigInt den = denominator(r);
  BigInt q = num / den;
  if (num % den != 0 && num < 0) --q;
  return narrow(q);
}

Int ceil_int(const Rational& r) {
  Int f = floor_int(r);
  return is_integral(r) ? f : f + 1;
}

bool is_integral(const Rational& r) { return denominator(r) == 1; }

double to_double(const Rational& r) { return r.convert_to<double>(); }

Int round_half_up(const Rational& r) { return floor_int(r + Rational(1, 2)); }

Rational approximate(double x, double rel) {
  if (!std::isfinite(x)) throw DomainError("cannot approximate a non-finite value");
  if (x == 0.0) return Rational(0);
  const bool negative = x < 0;
  double rest = std::fabs(x);
  const double target = rest;
  // Convergents h/k via the standard recurrence.
  BigInt h_prev = 1, h = static_cast<BigInt>(std::floor(rest));
  BigInt k_prev = 0, k = 1;
  double frac = rest - std::floor(rest);
  for (int iter = 0; iter < 64; ++iter) {
    Rational cand(h, k);
    if (std::fabs(to_double(cand) - target) <= rel * target || frac == 0.0) break;
    rest = 1.0 / frac;
    BigInt a = static_cast<BigInt>(std::floor(rest));
    frac = rest - std::floor(rest);
    BigInt h_next = a * h + h_prev;
    BigInt k_next = a * k + k_prev;
    h_prev = h;
    k_prev = k;
    h = h_next;
    k = k_next;
  }
  Rational out(h, k);
  return negative ? Rational(-out) : out;
}

std::string to_fraction(const Rational& r) {
  return numerator(r).str() + "/" + denominator(r).str();
}

Rational parse_rational(std::string_view text) {
  auto digits_only = [](std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
      if (c < '0' || c > '9') return false;
    return true;
  };
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  Rational value;
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    auto p = body.substr(0, slash), q = body.substr(slash + 1);
    if (!digits_only(p) || !digits_only(q)) throw DomainError("malformed rational: " + std::string(text));
    BigInt den{std::string(q)};
    if (den == 0) throw DomainError("zero denominator: " + std::string(text));
    value = Rational(BigInt(std::string(p)), den);
  } else if (auto dot = body.find('.'); dot != std::string_view::npos) {
    auto ip = body.substr(0, dot), fp = body.substr(dot + 1);
    if ((!ip.empty() && !digits_only(ip)) || !digits_only(fp) || (ip.empty() && fp.empty()))
      throw DomainError("malformed decimal: " + std::string(text));
    BigInt whole = ip.empty() ? BigInt(0) : BigInt(std::string(ip));
    BigInt scale = boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(fp.size()));
    value = Rational(whole * scale + BigInt(std::string(fp)), scale);
  } else {
    if (!digits_only(body)) throw DomainError("malformed number: " + std::string(text));
    value = Rational(BigInt(std::string(body)));
  }
  return negative ? Rational(-value) : value;
}

}  // namespace eggdrop
