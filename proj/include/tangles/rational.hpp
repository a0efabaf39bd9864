#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <vector>

#include "tangles/errors.hpp"

namespace tangles {

using Integer = boost::multiprecision::cpp_int;

// Reduced fraction p/q extended with the single unsigned infinity 1/0.
//
// Canonical form: den >= 0, gcd(|num|, den) = 1, and den = 0 implies
// num = 1.  The pair (0, 0) is rejected.
class ExtendedRational {
public:
  ExtendedRational() : num_(0), den_(1) {}
  ExtendedRational(Integer n) : num_(std::move(n)), den_(1) {}
  ExtendedRational(Integer n, Integer d);

  static ExtendedRational infinity() { return ExtendedRational(1, 0); }

  const Integer& num() const { return num_; }
  const Integer& den() const { return den_; }

  bool is_infinite() const { return den_ == 0; }
  bool is_zero() const { return den_ != 0 && num_ == 0; }

  // -1, 0 or +1 for finite values; throws on infinity.
  int sign() const;

  bool operator==(const ExtendedRational& o) const {
    return num_ == o.num_ && den_ == o.den_;
  }
  bool operator!=(const ExtendedRational& o) const { return !(*this == o); }

  std::string str() const;

private:
  Integer num_;
  Integer den_;
};

// Slope arithmetic.  Infinity absorbs under addition; a product of
// infinity with a nonzero value is infinity, and infinity * 0 throws
// IndefiniteProduct.
ExtendedRational er_add(const ExtendedRational& a, const ExtendedRational& b);
ExtendedRational er_mul(const ExtendedRational& a, const ExtendedRational& b);
ExtendedRational er_neg(const ExtendedRational& a);

// p/q -> -q/p.  Exchanges 0 and infinity; an involution on values.
ExtendedRational er_rotate(const ExtendedRational& a);

// Value of the integer sequence [a1 .. an] as an + 1/(a(n-1) + ... + 1/a1),
// evaluated exactly in the extended rationals.  Every sequence has a value.
ExtendedRational continued_fraction_value(const std::vector<Integer>& coeffs);

}  // namespace tangles
