#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>

namespace subadd {

// Arbitrary-precision integers and rationals. Rationals are kept in
// canonical (reduced, positive-denominator) form by all helpers here.
using Int = mpz_class;
using Rat = mpq_class;

class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " (at offset " + std::to_string(position) + ")"),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

inline Rat make_rat(long num, long den = 1) {
  if (den == 0) throw Error("rational with zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

inline Rat make_rat(const Int& num, const Int& den) {
  if (den == 0) throw Error("rational with zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

// 2^k as a rational, k may be negative.
inline Rat pow2(long k) {
  Int p = 1;
  mpz_mul_2exp(p.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(k < 0 ? -k : k));
  return k >= 0 ? Rat(p) : make_rat(Int(1), p);
}

inline Rat rat_abs(const Rat& r) { return r < 0 ? Rat(-r) : r; }

// Height of a rational: max(|numerator|, denominator) in reduced form.
inline Int rat_height(const Rat& r) {
  Int n = abs(r.get_num());
  const Int& d = r.get_den();
  return n > d ? n : Int(d);
}

inline Int floor_div(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

inline Int ceil_div(const Int& a, const Int& b) {
  Int q;
  mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

inline Int rat_floor(const Rat& r) { return floor_div(r.get_num(), r.get_den()); }
inline Int rat_ceil(const Rat& r) { return ceil_div(r.get_num(), r.get_den()); }

inline Int isqrt(const Int& n) {
  if (n < 0) throw Error("isqrt of negative value");
  Int s;
  mpz_sqrt(s.get_mpz_t(), n.get_mpz_t());
  return s;
}

// Parses "p", "p/q" or a decimal like "-1.25" into an exact rational.
Rat rat_from_string(const std::string& text);

// Reduced form, "p" when the denominator is 1, otherwise "p/q".
std::string rat_to_string(const Rat& r);

// Exact decimal rendering with at most max_frac_digits fractional digits;
// appends an ellipsis marker only if truncated (round-to-nearest, ties away
// from zero). Deterministic; no floating point involved.
std::string rat_to_decimal(const Rat& r, std::size_t max_frac_digits = 12);

}  // namespace subadd
