#include "ratvec/characterization.hpp"

#include <stdexcept>

namespace ratvec {

std::string to_string(RegionLabel label) {
  switch (label) {
    case RegionLabel::Z1: return "Z1";
    case RegionLabel::Z2: return "Z2";
    case RegionLabel::Z3: return "Z3";
    case RegionLabel::Outside: return "Outside";
    case RegionLabel::BoundaryIndeterminate: return "BoundaryIndeterminate";
  }
  return "?";
}

std::pair<Rational, Rational> peyser_bounds(int n, int k) {
  if (n < 2 || k < 1 || k > n - 1) throw std::out_of_range("invalid-index: need n >= 2, 1 <= k <= n-1");
  return {Rational(1, n - k + 1), Rational(k, k + 1)};
}

}  // namespace ratvec
