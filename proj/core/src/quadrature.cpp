#include "nlft/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <sstream>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "nlft/errors.hpp"

namespace nlft::quad {

namespace {

// Panels allowed before giving up; bisecting the worst panel each time.
constexpr std::size_t kMaxPanels = 4000;

struct Panel {
  double a = 0.0;
  double b = 0.0;
  double value = 0.0;
  double err = 0.0;
  double l1 = 0.0;
  bool operator<(const Panel& o) const { return err < o.err; }
};

Panel gk61(const RealFn& f, double a, double b) {
  using rule = boost::math::quadrature::gauss_kronrod<double, 61>;
  Panel p{a, b, 0.0, 0.0, 0.0};
  p.value = rule::integrate(f, a, b, 0, 0.0, &p.err, &p.l1);
  // Boost 1.74 reports the error of the rule on [-1, 1] without the
  // half-width factor it applies to the value and L1.
  p.err *= 0.5 * (b - a);
  return p;
}

// Global adaptive Gauss-Kronrod on an absolute target: the panel with the
// largest error estimate is bisected until the summed estimate meets tol.
// Boost's own adaptive driver tests each panel against a tolerance relative
// to that panel's integral, which never settles for integrands that change
// sign inside a narrow peak.
double gk(const RealFn& f, double a, double b, double tol) {
  if (a == b) return 0.0;
  std::priority_queue<Panel> panels;
  panels.push(gk61(f, a, b));
  double err = panels.top().err;
  double l1 = panels.top().l1;
  while (err > tol && panels.size() < kMaxPanels) {
    const Panel worst = panels.top();
    const double mid = 0.5 * (worst.a + worst.b);
    if (!(mid > worst.a && mid < worst.b)) break;
    panels.pop();
    const Panel left = gk61(f, worst.a, mid);
    const Panel right = gk61(f, mid, worst.b);
    err += left.err + right.err - worst.err;
    l1 += left.l1 + right.l1 - worst.l1;
    panels.push(left);
    panels.push(right);
  }
  double v = 0.0;
  err = 0.0;
  for (; !panels.empty(); panels.pop()) {
    v += panels.top().value;
    err += panels.top().err;
  }
  if (!std::isfinite(v) || err > std::max(tol, 1e-13 * l1)) {
    std::ostringstream os;
    os << "Gauss-Kronrod quadrature did not converge (error estimate " << err << ", tol " << tol << ")";
    throw NumericalError(os.str());
  }
  return v;
}

}  // namespace

double adaptive(const RealFn& f, double a, double b, double tol) { return gk(f, a, b, tol); }

cplx adaptive(const ComplexFn& f, double a, double b, double tol) {
  const double re = gk([&](double t) { return f(t).real(); }, a, b, 0.5 * tol);
  const double im = gk([&](double t) { return f(t).imag(); }, a, b, 0.5 * tol);
  return {re, im};
}

}  // namespace nlft::quad
