#include "curvcert/ratcalc/numeric.hpp"

namespace curvcert::ratcalc {

NumericRatFunc::NumericRatFunc(const RatFunc& f, exact::Branch branch) {
  for (const auto& c : f.num().coeffs()) num_.push_back(exact::embed_complex(c, branch));
  for (const auto& c : f.den().coeffs()) den_.push_back(exact::embed_complex(c, branch));
}

std::complex<double> NumericRatFunc::operator()(std::complex<double> z) const {
  auto horner = [z](const std::vector<std::complex<double>>& c) {
    std::complex<double> acc = 0.0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * z + *it;
    return acc;
  };
  return horner(num_) / horner(den_);
}

}  // namespace curvcert::ratcalc
