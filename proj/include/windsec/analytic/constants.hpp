#pragma once

// Constants entering the large-n and large-m expansions.

#include <vector>

#include "windsec/analytic/types.hpp"

namespace windsec::analytic {

// Zero-winding to nonzero-winding area ratio for one closed path.
inline constexpr double kDefaultQ = 0.2;
inline constexpr double kEulerGamma = 0.57721566490153286061;

// c_j = int_0^inf dx exp(-j x) K_0(x)^j.
Estimate constant_cj(int j);

// d_j = int_0^inf dx exp(-j x) K_0(x)^{j-1} int_0^inf du exp(-x cosh u) u tanh(u/2).
Estimate constant_dj(int j);

// c_{j,m} = int_0^inf dx exp(-j x) K_0(x)^j (1 - f(x))^{m-j}, m >= j.
Estimate constant_cjm(int j, int m);

// c_{2,2} from its series
//   pi^2/4 - 1 + sum_k [ pi^2/4 prod_{i<=k} (1 - 1/(2i))^2 - prod_{i<=k} (1 - 1/(2i+1))^2 ],
// summed termwise (each part diverges alone) with Richardson extrapolation.
Estimate c22_series();

struct ModelConstants {
  double q = kDefaultQ;
  double euler_C = kEulerGamma;
  double d2 = 0.0;
  double c3 = 0.0;
  std::vector<double> c_j;                 // c_1 .. c_4
  std::vector<double> d_j;                 // d_2, d_4
  std::vector<std::vector<double>> c_jm;   // c_jm[m-1][j-1], 1 <= j <= m <= 3
};

// Computed once on first use; safe to call concurrently.
const ModelConstants& model_constants();

}  // namespace windsec::analytic
