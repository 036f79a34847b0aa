#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace fasla {

/// Exact rational scalar. All library arithmetic is exact; values are kept
/// in lowest terms with positive denominator (mpq canonical form).
using Rat = mpq_class;
using Int = mpz_class;

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DimensionError : Error {
  using Error::Error;
};

struct ParseError : Error {
  using Error::Error;
};

/// Thrown when a constructor refuses invalid data (failed validation).
struct ValidationError : Error {
  using Error::Error;
};

/// Thrown by the exact exponential when the left multiplication is not
/// nilpotent; carries the minimal polynomial as a witness.
struct NonNilpotentError : Error {
  explicit NonNilpotentError(const std::string& msg, std::string minpoly)
      : Error(msg), minimal_polynomial(std::move(minpoly)) {}
  std::string minimal_polynomial;
};

inline Rat rat(long num, long den = 1) {
  if (den == 0) throw ParseError("zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

/// Parses "p", "p/q" or "-p/q". Accepts non-reduced fractions and
/// normalizes; rejects anything else.
Rat parse_rat(const std::string& s);

/// Lowest-terms rendering: "p" when the denominator is 1, else "p/q".
std::string rat_str(const Rat& r);

/// Nearest rational within `tol` of x, by continued fractions.
/// Only used by the approximate CLI input path.
Rat rat_from_double(double x, double tol = 1e-9);

Int factorial(unsigned long k);

}  // namespace fasla
