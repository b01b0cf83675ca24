#include "pricing/eps_affine.hpp"

#include <sstream>

namespace pricing {

std::string to_string(const EpsAffine& x) {
  std::ostringstream out;
  out << to_string(x.c0);
  if (x.c1 != 0) {
    out << (x.c1 > 0 ? " + " : " - ");
    const Rational mag = x.c1 > 0 ? x.c1 : Rational(-x.c1);
    if (mag != 1) out << to_string(mag) << "*";
    out << "eps";
  }
  return out.str();
}

}  // namespace pricing
