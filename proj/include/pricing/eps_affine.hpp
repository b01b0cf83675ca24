#pragma once

#include <string>

#include "pricing/errors.hpp"
#include "pricing/rational.hpp"

namespace pricing {

// A number of the form c0 + c1*eps for a formal infinitesimal eps > 0.
// Ordered lexicographically: (c0, c1) < (d0, d1) iff c0 < d0, or c0 = d0 and
// c1 < d1. This agrees with the numeric order for every sufficiently small
// eps > 0, so eps never needs a concrete value.
//
// Closed under +, - and scaling by Rational. A product of two EpsAffine
// values is only defined when at most one factor carries an eps term; an
// eps^2 term would mean first-order arithmetic no longer suffices, which is
// an internal error here.
struct EpsAffine {
  Rational c0;
  Rational c1;

  EpsAffine() : c0(0), c1(0) {}
  explicit EpsAffine(Rational constant) : c0(std::move(constant)), c1(0) {}
  EpsAffine(Rational constant, Rational slope) : c0(std::move(constant)), c1(std::move(slope)) {}

  EpsAffine& operator+=(const EpsAffine& o) {
    c0 += o.c0;
    c1 += o.c1;
    return *this;
  }
  EpsAffine& operator-=(const EpsAffine& o) {
    c0 -= o.c0;
    c1 -= o.c1;
    return *this;
  }
  EpsAffine& operator*=(const Rational& s) {
    c0 *= s;
    c1 *= s;
    return *this;
  }

  friend EpsAffine operator+(EpsAffine a, const EpsAffine& b) { return a += b; }
  friend EpsAffine operator-(EpsAffine a, const EpsAffine& b) { return a -= b; }
  friend EpsAffine operator-(const EpsAffine& a) { return EpsAffine(-a.c0, -a.c1); }
  friend EpsAffine operator*(EpsAffine a, const Rational& s) { return a *= s; }
  friend EpsAffine operator*(const Rational& s, EpsAffine a) { return a *= s; }

  friend EpsAffine operator*(const EpsAffine& a, const EpsAffine& b) {
    if (a.c1 != 0 && b.c1 != 0)
      fail(Errc::Internal, "EpsAffine product would carry an eps^2 term");
    return EpsAffine(a.c0 * b.c0, a.c0 * b.c1 + a.c1 * b.c0);
  }

  friend bool operator==(const EpsAffine& a, const EpsAffine& b) {
    return a.c0 == b.c0 && a.c1 == b.c1;
  }
  friend bool operator!=(const EpsAffine& a, const EpsAffine& b) { return !(a == b); }
  friend bool operator<(const EpsAffine& a, const EpsAffine& b) {
    if (a.c0 != b.c0) return a.c0 < b.c0;
    return a.c1 < b.c1;
  }
  friend bool operator>(const EpsAffine& a, const EpsAffine& b) { return b < a; }
  friend bool operator<=(const EpsAffine& a, const EpsAffine& b) { return !(b < a); }
  friend bool operator>=(const EpsAffine& a, const EpsAffine& b) { return !(a < b); }
};

std::string to_string(const EpsAffine& x);

}  // namespace pricing
