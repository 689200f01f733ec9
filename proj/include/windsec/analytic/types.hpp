#pragma once

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

namespace windsec::analytic {

enum class Method { quadrature, series, closed_form, mc_integration, asymptotic };

inline const char* to_string(Method m) {
  switch (m) {
    case Method::quadrature: return "quadrature";
    case Method::series: return "series";
    case Method::closed_form: return "closed_form";
    case Method::mc_integration: return "mc_integration";
    case Method::asymptotic: return "asymptotic";
  }
  return "?";
}

// An area or constant (areas in units of the Brownian time t) with its
// numerical or statistical error.
struct Estimate {
  Estimate() = default;
  Estimate(double v, double e, Method m) : value(v), err(e), method(m) {}

  double value = 0.0;
  double err = 0.0;
  Method method = Method::quadrature;
  // Set when the value comes from a fallback (e.g. an asymptotic formula
  // standing in for an unsupported integral) or a tolerance was not met.
  bool warning = false;
  std::string note;
};

// Conjugate variable of the winding angle. G_alpha is periodic with period
// one and symmetric under alpha -> 1 - alpha, so any alpha maps to [0, 1/2].
struct WindingPhase {
  double alpha = 0.0;
  bool reduced = false;

  static WindingPhase reduce(double alpha) {
    double a = alpha - std::floor(alpha);
    if (a > 0.5) a = 1.0 - a;
    return {a, true};
  }
};

// A winding label: the total winding n and, when known, the per-path
// windings (n_1, ..., n_m).
struct SectorLabel {
  int total_n = 0;
  std::vector<int> tuple;

  static SectorLabel from_tuple(std::vector<int> t) {
    int n = 0;
    for (int v : t) n += v;
    return {n, std::move(t)};
  }
  bool consistent() const {
    int n = 0;
    for (int v : tuple) n += v;
    return tuple.empty() || n == total_n;
  }
};

class UnsupportedOrder : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace windsec::analytic
