#include "bohr/sampling.hpp"

#include "bohr/error.hpp"

namespace bohr {

double radical_inverse(std::uint64_t index, unsigned base) {
  double result = 0.0;
  double scale = 1.0 / base;
  while (index > 0) {
    result += static_cast<double>(index % base) * scale;
    index /= base;
    scale /= base;
  }
  return result;
}

std::vector<HalfPlanePoint> strip_samples(const Strip& strip, double t_extent, int n) {
  require(n >= 1, "strip_samples: need at least one sample");
  std::vector<HalfPlanePoint> points;
  points.reserve(static_cast<std::size_t>(n));
  const double width = strip.beta() - strip.alpha();
  for (int i = 1; i <= n; ++i) {
    const double u = radical_inverse(static_cast<std::uint64_t>(i), 2);
    const double v = radical_inverse(static_cast<std::uint64_t>(i), 3);
    points.push_back({strip.alpha() + width * u, -t_extent + 2.0 * t_extent * v});
  }
  return points;
}

}  // namespace bohr
