#include "hre/bench.hpp"

#include <cmath>
#include <stdexcept>

namespace hre {

WordBreakInstance scaling_instance(std::size_t n, std::size_t m, std::size_t period) {
  if (period == 0) throw std::invalid_argument("period must be positive");
  WordBreakInstance inst;
  inst.text.assign(n, 'a');
  std::size_t total = 0;
  for (std::size_t len = period; total + len <= m && len <= n; len += period) {
    inst.dict.push_back(InputString(len, 'a'));
    total += len;
  }
  return inst;
}

double loglog_slope(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2) throw std::invalid_argument("need two or more points");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  auto k = static_cast<double>(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    double lx = std::log(x[i]), ly = std::log(y[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  return (k * sxy - sx * sy) / (k * sxx - sx * sx);
}

}  // namespace hre
