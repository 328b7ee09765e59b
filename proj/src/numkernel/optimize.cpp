#include "infoscale/numkernel/optimize.hpp"

#include <cmath>

#include "infoscale/error.hpp"

namespace infoscale {

double argmax_1d(const std::function<double(double)>& f, double a, double b, double tol) {
  detail::require(std::isfinite(a) && std::isfinite(b) && a < b, "argmax_1d: need a < b");
  detail::require(tol > 0.0, "argmax_1d: tol must be > 0");

  constexpr int last = kArgmaxGridPoints - 1;
  const double step = (b - a) / last;
  auto grid = [&](int k) { return k == last ? b : a + step * k; };

  int best = 0;
  double best_value = f(a);
  for (int k = 1; k <= last; ++k) {
    const double value = f(grid(k));
    if (value > best_value) {
      best = k;
      best_value = value;
    }
  }

  double lo = grid(best > 0 ? best - 1 : 0);
  double hi = grid(best < last ? best + 1 : last);

  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = hi - inv_phi * (hi - lo);
  double x2 = lo + inv_phi * (hi - lo);
  double f1 = f(x1);
  double f2 = f(x2);
  while (hi - lo > tol) {
    if (f1 < f2) {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + inv_phi * (hi - lo);
      f2 = f(x2);
    } else {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - inv_phi * (hi - lo);
      f1 = f(x1);
    }
    // bracket stops shrinking once it is a few ulps wide
    if (x1 >= x2) break;
  }
  const double interior = 0.5 * (lo + hi);
  if ((best == 0 || best == last) && best_value >= f(interior)) return grid(best);
  return interior;
}

}  // namespace infoscale
