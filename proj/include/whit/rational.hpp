#pragma once

#include <gmpxx.h>

#include <Eigen/Core>
#include <string>

#include "whit/errors.hpp"

namespace whit {

// Exact rational scalar. GMP keeps every intermediate value exact; nothing
// in this library ever rounds.
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
  Rat q(num, den);
  q.canonicalize();
  return q;
}

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

// q in Z_{<=0}: the "non-generic" integrality test used by the genericity
// conditions.
inline bool in_nonpositive_integers(const Rat& q) {
  return is_integer(q) && q <= 0;
}

// Parses "p", "-p", "p/q".  Whitespace is not accepted.
inline Rat parse_rat(const std::string& s) {
  if (s.empty()) throw ParseError("empty rational literal");
  try {
    Rat q(s);
    q.canonicalize();
    if (q.get_den() == 0) throw ParseError("zero denominator in '" + s + "'");
    return q;
  } catch (const std::invalid_argument&) {
    throw ParseError("bad rational literal '" + s + "'");
  }
}

inline std::string rat_str(const Rat& q) { return q.get_str(); }

// Exact complex rational a + b*i.  Unitary characters of the nilradical take
// purely imaginary values, so both components are first-class.
struct CRat {
  Rat re, im;

  CRat() : re(0), im(0) {}
  CRat(Rat r) : re(std::move(r)), im(0) {}  // NOLINT: implicit by design
  CRat(long n) : re(n), im(0) {}            // NOLINT
  CRat(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}

  bool is_zero() const { return re == 0 && im == 0; }
  bool is_real() const { return im == 0; }

  CRat& operator+=(const CRat& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  CRat& operator-=(const CRat& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  CRat& operator*=(const CRat& o) {
    Rat r = re * o.re - im * o.im;
    im = re * o.im + im * o.re;
    re = r;
    return *this;
  }
  CRat& operator/=(const CRat& o) {
    Rat n = o.re * o.re + o.im * o.im;
    if (n == 0) throw Error("division by zero complex rational");
    Rat r = (re * o.re + im * o.im) / n;
    im = (im * o.re - re * o.im) / n;
    re = r;
    return *this;
  }

  friend CRat operator+(CRat a, const CRat& b) { return a += b; }
  friend CRat operator-(CRat a, const CRat& b) { return a -= b; }
  friend CRat operator*(CRat a, const CRat& b) { return a *= b; }
  friend CRat operator/(CRat a, const CRat& b) { return a /= b; }
  friend CRat operator-(const CRat& a) { return CRat(-a.re, -a.im); }
  friend bool operator==(const CRat& a, const CRat& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const CRat& a, const CRat& b) { return !(a == b); }

  // Total order, used only as a map key / pivot chooser.
  friend bool operator<(const CRat& a, const CRat& b) {
    if (a.re != b.re) return a.re < b.re;
    return a.im < b.im;
  }
};

inline CRat crat_i() { return CRat(Rat(0), Rat(1)); }

inline std::string crat_str(const CRat& z) {
  if (z.im == 0) return rat_str(z.re);
  if (z.re == 0) return rat_str(z.im) + "i";
  std::string s = rat_str(z.re);
  if (z.im > 0) s += "+";
  return s + rat_str(z.im) + "i";
}

}  // namespace whit

namespace Eigen {

template <>
struct NumTraits<whit::Rat> : GenericNumTraits<whit::Rat> {
  using Real = whit::Rat;
  using NonInteger = whit::Rat;
  using Nested = whit::Rat;
  using Literal = long;

  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }

  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 60,
    MulCost = 60,
  };
};

}  // namespace Eigen
