#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "subadd/rational.hpp"

namespace subadd::qspan {

class PrecisionExhausted : public Error {
 public:
  explicit PrecisionExhausted(const std::string& what) : Error(what) {}
};

class BasisMismatch : public Error {
 public:
  BasisMismatch() : Error("elements belong to different bases") {}
};

// Closed interval with exact rational endpoints.
struct Interval {
  Rat lo;
  Rat hi;

  Interval() : lo(0), hi(0) {}
  Interval(Rat l, Rat h);
  static Interval point(const Rat& v) { return Interval(v, v); }

  Rat width() const { return Rat(hi - lo); }
  bool is_point() const { return lo == hi; }
  bool contains(const Rat& v) const { return lo <= v && v <= hi; }
  bool contains(const Interval& other) const {
    return lo <= other.lo && other.hi <= hi;
  }
  Rat midpoint() const { return Rat((lo + hi) / 2); }

  Interval operator+(const Interval& o) const { return Interval(lo + o.lo, hi + o.hi); }
  Interval operator-(const Interval& o) const { return Interval(lo - o.hi, hi - o.lo); }
  Interval negated() const { return Interval(-hi, -lo); }
  Interval scaled(const Rat& q) const {
    return q >= 0 ? Interval(lo * q, hi * q) : Interval(hi * q, lo * q);
  }
  static Interval hull(const Interval& a, const Interval& b) {
    return Interval(a.lo < b.lo ? a.lo : b.lo, a.hi > b.hi ? a.hi : b.hi);
  }
};

// Interval quotient a / b, defined only when b does not contain 0.
Interval interval_div(const Interval& a, const Interval& b);

// Directed rational enclosure of sqrt(v) for v >= 0, width <= 2^-prec
// plus the inherited input width contribution.
Interval interval_sqrt(const Interval& v, long prec);

enum class Ordering { LT, EQ, GT };

// A named real constant together with a certified enclosure procedure.
// enclose(p) returns a closed interval of width <= 2^-p containing the
// constant, with enclose(p+1) contained in enclose(p). Built-in irrational
// constants use the canonical dyadic enclosure [a/2^p, (a+1)/2^p] with
// a = floor(value * 2^p), which nests по construction as p grows.
class BasisConstant {
 public:
  enum class Kind { One, Sqrt, Pi, E, Log, UserInterval };

  static BasisConstant one();
  static BasisConstant sqrt_of(unsigned long n);  // n not a perfect square
  static BasisConstant pi();
  static BasisConstant e();
  static BasisConstant log_of(unsigned long n);  // natural log, n >= 1
  static BasisConstant user_interval(std::string name, Rat lo, Rat hi);

  const std::string& name() const { return name_; }
  Kind kind() const { return kind_; }

  // Present iff the constant is known exactly (ONE, log(1), degenerate
  // user intervals).
  std::optional<Rat> exact_value() const;

  Interval enclose(long prec) const;

  // Human-readable declaration body, e.g. "sqrt(2)" or "pi".
  std::string spec_string() const;

 private:
  BasisConstant(Kind kind, std::string name, unsigned long arg, Rat ulo, Rat uhi)
      : kind_(kind), name_(std::move(name)), arg_(arg), user_lo_(std::move(ulo)), user_hi_(std::move(uhi)) {}

  // floor(value * 2^prec) for irrational built-ins.
  Int dyadic_floor(long prec) const;

  Kind kind_;
  std::string name_;
  unsigned long arg_ = 0;  // n for Sqrt/Log
  Rat user_lo_, user_hi_;

  // Cache of (prec, floor) pairs; recomputation is pure, so racing threads
  // agree on the value.
  mutable std::mutex cache_mutex_;
  mutable std::vector<std::pair<long, Int>> floor_cache_;

 public:
  BasisConstant(const BasisConstant& o)
      : kind_(o.kind_), name_(o.name_), arg_(o.arg_), user_lo_(o.user_lo_), user_hi_(o.user_hi_) {}
};

// Ordered list of declared constants; constants[0] is always ONE.
// Q-linear independence of the constants is a user obligation: it is
// declared, never verified. A dependent basis surfaces as a
// PrecisionExhausted error from comparisons.
class Basis {
 public:
  explicit Basis(std::vector<BasisConstant> constants);

  // Default working basis: {1, sqrt(2)}.
  static std::shared_ptr<const Basis> default_basis();

  // Parses a declaration text, one constant per line:
  //   name = sqrt(2) | pi | e | log(n) | interval(lo, hi)
  // ONE is implicit and always first. '#' starts a comment.
  static std::shared_ptr<const Basis> parse(const std::string& text);

  std::size_t size() const { return constants_.size(); }
  const BasisConstant& at(std::size_t i) const { return constants_[i]; }
  std::optional<std::size_t> index_of(const std::string& name) const;

  std::string declaration_text() const;

 private:
  std::vector<BasisConstant> constants_;
};

using BasisPtr = std::shared_ptr<const Basis>;

// Exact element of the Q-linear span of a basis: a rational coordinate
// per constant. Immutable after construction.
class RealElement {
 public:
  RealElement(BasisPtr basis, std::vector<Rat> coords);

  static RealElement zero(BasisPtr basis);
  static RealElement from_rational(BasisPtr basis, Rat q);

  const BasisPtr& basis() const { return basis_; }
  const std::vector<Rat>& coords() const { return coords_; }
  const Rat& coord(std::size_t i) const { return coords_[i]; }

  bool is_zero() const;
  // True iff every coordinate beyond index 0 vanishes (valid under the
  // declared independence of the basis).
  bool is_rational() const;
  // The exact rational value; requires is_rational().
  Rat rational_value() const;

  RealElement add(const RealElement& other) const;
  RealElement sub(const RealElement& other) const;
  RealElement negated() const;
  RealElement scaled(const Rat& q) const;

  // Interval of width <= 2^-prec containing the exact value; refines
  // monotonically in prec, and is a zero-width point for rationals.
  Interval enclose(long prec) const;

  // Exact trichotomy. Decides equality from coordinates; otherwise refines
  // enclosures of the difference with doubling precision until separation.
  // Hitting the precision cap without separation throws PrecisionExhausted:
  // under true independence it cannot happen, so it signals a dependent
  // basis (or an under-specified user constant).
  Ordering compare(const RealElement& other) const;
  Ordering compare_to_zero() const;

  bool equals(const RealElement& other) const;
  bool less_than(const RealElement& other) const { return compare(other) == Ordering::LT; }

  // Element literal, e.g. "3/2 + 1*sqrt2".
  std::string to_string() const;

  // Parses the element literal syntax: q0 + q1*name1 + ...
  static RealElement parse(BasisPtr basis, const std::string& text);

 private:
  BasisPtr basis_;
  std::vector<Rat> coords_;
};

RealElement element_add(const RealElement& x, const RealElement& y);
RealElement element_scale(const Rat& q, const RealElement& x);
Ordering element_compare(const RealElement& x, const RealElement& y);
bool element_is_rational(const RealElement& x);
Interval element_enclose(const RealElement& x, long prec);

// Comparison precision policy: start at 16 bits, double each round, hard
// cap at 4096. The cap is an error, never a silent tie.
inline constexpr long kCompareStartPrecision = 16;
inline constexpr long kCompareMaxPrecision = 4096;

// Value in R ∪ {-inf, +inf}. Finite values carry a rational enclosure and,
// when known exactly, the rational itself (the enclosure is then the point).
struct ExtReal {
  enum class Kind { Finite, PlusInfinity, MinusInfinity };

  Kind kind = Kind::Finite;
  Interval enclosure;
  std::optional<Rat> exact;

  static ExtReal from_exact(Rat v) {
    ExtReal r;
    r.enclosure = Interval::point(v);
    r.exact = std::move(v);
    return r;
  }
  static ExtReal from_interval(Interval enc) {
    ExtReal r;
    if (enc.is_point()) r.exact = enc.lo;
    r.enclosure = std::move(enc);
    return r;
  }
  static ExtReal plus_infinity() {
    ExtReal r;
    r.kind = Kind::PlusInfinity;
    return r;
  }
  static ExtReal minus_infinity() {
    ExtReal r;
    r.kind = Kind::MinusInfinity;
    return r;
  }

  bool is_finite() const { return kind == Kind::Finite; }
  std::string to_string() const;
};

}  // namespace subadd::qspan
