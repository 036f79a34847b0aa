#include "fasla/rational.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>

namespace fasla {

namespace {

bool valid_integer_token(const std::string& s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

}  // namespace

Rat parse_rat(const std::string& s) {
  const std::size_t slash = s.find('/');
  std::string num = (slash == std::string::npos) ? s : s.substr(0, slash);
  std::string den = (slash == std::string::npos) ? "1" : s.substr(slash + 1);
  if (!valid_integer_token(num) || !valid_integer_token(den))
    throw ParseError("invalid rational literal: \"" + s + "\"");
  Int n(num), d(den);
  if (d == 0) throw ParseError("zero denominator in \"" + s + "\"");
  Rat r(n, d);
  r.canonicalize();
  return r;
}

std::string rat_str(const Rat& r) { return r.get_str(); }

Rat rat_from_double(double x, double tol) {
  if (!std::isfinite(x)) throw ParseError("non-finite number in input");
  const bool neg = x < 0;
  double v = neg ? -x : x;
  // continued-fraction convergents p/q of v
  Int p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  double frac = v;
  for (int iter = 0; iter < 64; ++iter) {
    const double fl = std::floor(frac);
    if (fl > 9e18) break;
    Int a(static_cast<unsigned long>(fl));
    Int p2 = a * p1 + p0;
    Int q2 = a * q1 + q0;
    p0 = p1;
    q0 = q1;
    p1 = p2;
    q1 = q2;
    Rat cand(p1, q1);
    cand.canonicalize();
    if (std::abs(cand.get_d() - v) <= tol) {
      if (neg) cand = -cand;
      return cand;
    }
    const double rem = frac - fl;
    if (rem < 1e-18) break;
    frac = 1.0 / rem;
  }
  Rat cand(p1, q1);
  cand.canonicalize();
  if (std::abs(cand.get_d() - v) <= tol) return neg ? Rat(-cand) : cand;
  throw ParseError("cannot approximate value by a rational within tolerance");
}

Int factorial(unsigned long k) {
  Int f;
  mpz_fac_ui(f.get_mpz_t(), k);
  return f;
}

}  // namespace fasla
