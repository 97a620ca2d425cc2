#include "fluctua/quadrature.hpp"

#include <cmath>
#include <queue>
#include <stdexcept>
#include <vector>

namespace fluctua {

namespace {

// QUADPACK dqk15 nodes and weights on [-1, 1]
constexpr double kXgk[8] = {
    0.9914553711208126, 0.9491079123427585, 0.8648644233597691,
    0.7415311855993944, 0.5860872354676911, 0.4058451513773972,
    0.2077849550078985, 0.0};
constexpr double kWgk[8] = {
    0.0229353220105292, 0.0630920926299785, 0.1047900103222502,
    0.1406532597155259, 0.1690047266392679, 0.1903505780647854,
    0.2044329400752989, 0.2094821410847278};
constexpr double kWg[4] = {0.1294849661688697, 0.2797053914892767,
                           0.3818300505051189, 0.4179591836734694};

struct Panel {
  double a, b;
  double value;
  double err;
  bool operator<(const Panel& o) const { return err < o.err; }
};

Panel evaluate_panel(const std::function<double(double)>& f, double a,
                     double b) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  double fv[15];
  for (int i = 0; i < 7; ++i) {
    fv[i] = f(c - h * kXgk[i]);
    fv[14 - i] = f(c + h * kXgk[i]);
  }
  fv[7] = f(c);
  double kron = kWgk[7] * fv[7];
  double gauss = kWg[3] * fv[7];
  for (int i = 0; i < 7; ++i) {
    kron += kWgk[i] * (fv[i] + fv[14 - i]);
    if (i % 2 == 1) gauss += kWg[i / 2] * (fv[i] + fv[14 - i]);
  }
  Panel p;
  p.a = a;
  p.b = b;
  p.value = kron * h;
  p.err = std::abs((kron - gauss) * h);
  return p;
}

}  // namespace

QuadResult integrate(const std::function<double(double)>& f, double a,
                     double b, double tol, int max_intervals) {
  std::priority_queue<Panel> queue;
  queue.push(evaluate_panel(f, a, b));
  double total = queue.top().value;
  double total_err = queue.top().err;
  int panels = 1;
  while (total_err > tol * std::max(1.0, std::abs(total)) &&
         total_err > 1e-300) {
    if (panels >= max_intervals)
      throw std::runtime_error("quadrature did not converge");
    Panel worst = queue.top();
    queue.pop();
    double mid = 0.5 * (worst.a + worst.b);
    if (mid <= worst.a || mid >= worst.b)
      throw std::runtime_error("quadrature did not converge");
    Panel left = evaluate_panel(f, worst.a, mid);
    Panel right = evaluate_panel(f, mid, worst.b);
    total += left.value + right.value - worst.value;
    total_err += left.err + right.err - worst.err;
    queue.push(left);
    queue.push(right);
    ++panels;
  }
  return {total, total_err, panels};
}

QuadResult integrate_half_line(const std::function<double(double)>& f,
                               double tol, int max_intervals) {
  auto g = [&f](double u) {
    double w = 1.0 - u;
    double x = u / w;
    return f(x) / (w * w);
  };
  return integrate(g, 0.0, 1.0, tol, max_intervals);
}

}  // namespace fluctua
