#include "rsc/core/poly.hpp"

namespace rsc {

std::string poly_to_string(const Poly<FieldElement>& p) {
  std::string out;
  for (int i = p.degree(); i >= 0; --i) {
    const FieldElement& c = p[static_cast<std::size_t>(i)];
    if (c.is_zero()) continue;
    const bool simple = c.terms().size() == 1;
    const bool negative = simple && c.terms()[0].coeff.sign() < 0;
    std::string mag = simple ? (negative ? (-c).to_string() : c.to_string()) : "(" + c.to_string() + ")";
    std::string power = i == 0 ? "" : (i == 1 ? "x" : "x^" + std::to_string(i));
    std::string term = (mag == "1" && i > 0) ? power : mag + power;
    if (out.empty()) out = (negative ? "-" : "") + term;
    else out += (negative ? " - " : " + ") + term;
  }
  return out.empty() ? "0" : out;
}

}  // namespace rsc
