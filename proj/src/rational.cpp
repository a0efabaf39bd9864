#include "tangles/rational.hpp"

#include <boost/multiprecision/integer.hpp>

namespace tangles {

ExtendedRational::ExtendedRational(Integer n, Integer d)
    : num_(std::move(n)), den_(std::move(d)) {
  if (num_ == 0 && den_ == 0)
    throw std::logic_error("extended rational 0/0");
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  if (den_ == 0) {
    num_ = 1;  // unsigned infinity
    return;
  }
  Integer g = boost::multiprecision::gcd(num_ < 0 ? Integer(-num_) : num_, den_);
  if (g > 1) {
    num_ /= g;
    den_ /= g;
  }
}

int ExtendedRational::sign() const {
  if (is_infinite())
    throw std::logic_error("sign of infinity");
  if (num_ == 0) return 0;
  return num_ < 0 ? -1 : 1;
}

std::string ExtendedRational::str() const {
  return num_.str() + "/" + den_.str();
}

ExtendedRational er_add(const ExtendedRational& a, const ExtendedRational& b) {
  if (a.is_infinite() || b.is_infinite())
    return ExtendedRational::infinity();
  return ExtendedRational(a.num() * b.den() + b.num() * a.den(),
                          a.den() * b.den());
}

ExtendedRational er_mul(const ExtendedRational& a, const ExtendedRational& b) {
  if (a.is_infinite() || b.is_infinite()) {
    if (a.is_zero() || b.is_zero()) throw IndefiniteProduct();
    return ExtendedRational::infinity();
  }
  return ExtendedRational(a.num() * b.num(), a.den() * b.den());
}

ExtendedRational er_neg(const ExtendedRational& a) {
  if (a.is_infinite()) return a;
  return ExtendedRational(-a.num(), a.den());
}

ExtendedRational er_rotate(const ExtendedRational& a) {
  return ExtendedRational(-a.den(), a.num());
}

ExtendedRational continued_fraction_value(const std::vector<Integer>& coeffs) {
  if (coeffs.empty())
    throw std::logic_error("empty continued fraction");
  ExtendedRational v(coeffs.front());
  for (std::size_t i = 1; i < coeffs.size(); ++i) {
    // v := a_i + 1/v, with 1/0 = infinity and 1/infinity = 0.
    ExtendedRational recip(v.den(), v.num());
    v = er_add(ExtendedRational(coeffs[i]), recip);
  }
  return v;
}

}  // namespace tangles
