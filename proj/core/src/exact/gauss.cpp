#include "curvcert/exact/gauss.hpp"

#include "curvcert/errors.hpp"

namespace curvcert::exact {

GaussRational GaussRational::inverse() const {
  if (is_zero()) throw DivisionByZero("Gaussian rational division by zero");
  Rational n = norm();
  return {re_ / n, -im_ / n};
}

std::optional<GaussRational> GaussRational::sqrt() const {
  if (is_zero()) return GaussRational();
  // (x + y i)^2 = re + im i  =>  x^2 = (re + |w|) / 2, y^2 = (|w| - re) / 2.
  auto modulus = norm().sqrt();
  if (!modulus) return std::nullopt;
  auto x = ((re_ + *modulus) / Rational(2)).sqrt();
  auto y = ((*modulus - re_) / Rational(2)).sqrt();
  if (!x || !y) return std::nullopt;
  Rational yy = *y;
  if (im_.sign() < 0) yy = -yy;
  if (x->is_zero()) return GaussRational(Rational(0), y->abs());
  return GaussRational(*x, yy);
}

std::string GaussRational::to_string() const {
  std::string im = im_.to_string();
  if (im_.sign() >= 0) im = "+" + im;
  return "(" + re_.to_string() + im + " i)";
}

GaussRational& GaussRational::operator+=(const GaussRational& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}
GaussRational& GaussRational::operator-=(const GaussRational& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}
GaussRational& GaussRational::operator*=(const GaussRational& o) {
  if (im_.is_zero() && o.im_.is_zero()) {
    re_ *= o.re_;
    return *this;
  }
  Rational r = re_ * o.re_ - im_ * o.im_;
  Rational i = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(r);
  im_ = std::move(i);
  return *this;
}
GaussRational& GaussRational::operator/=(const GaussRational& o) { return *this *= o.inverse(); }

}  // namespace curvcert::exact
