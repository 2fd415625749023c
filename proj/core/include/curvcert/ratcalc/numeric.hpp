#pragma once

#include <complex>
#include <vector>

#include "curvcert/ratcalc/ratfunc.hpp"

namespace curvcert::ratcalc {

// Floating image of a rational function under one branch of the tower.
class NumericRatFunc {
 public:
  NumericRatFunc(const RatFunc& f, exact::Branch branch);
  std::complex<double> operator()(std::complex<double> z) const;

 private:
  std::vector<std::complex<double>> num_;
  std::vector<std::complex<double>> den_;
};

}  // namespace curvcert::ratcalc
