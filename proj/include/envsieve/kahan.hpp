#pragma once

#include <complex>

namespace envsieve {

// Kahan-compensated accumulator: keeps long sums of similar-sized terms
// accurate to a few ulps independently of their count.
struct KahanSum {
  double s = 0.0;
  double c = 0.0;

  void add(double x) {
    const double y = x - c;
    const double t = s + y;
    c = (t - s) - y;
    s = t;
  }
  double value() const { return s; }
};

struct KahanComplex {
  KahanSum re, im;

  void add(const std::complex<double>& z) {
    re.add(z.real());
    im.add(z.imag());
  }
  std::complex<double> value() const { return {re.value(), im.value()}; }
};

}  // namespace envsieve
