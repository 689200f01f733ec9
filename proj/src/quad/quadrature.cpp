#include "windsec/quad/quadrature.hpp"

namespace windsec::quad {

void QuadSpec::validate() const {
  if (!(rel_tol > 0.0)) throw std::invalid_argument("QuadSpec: rel_tol must be > 0");
  if (!(abs_tol >= 0.0)) throw std::invalid_argument("QuadSpec: abs_tol must be >= 0");
  if (max_levels < 2) throw std::invalid_argument("QuadSpec: max_levels must be >= 2");
  if (dim_cap < 1 || dim_cap > 3) throw std::invalid_argument("QuadSpec: dim_cap must be 1, 2 or 3");
}

QuadSpec QuadSpec::for_dimension(int d) {
  QuadSpec s;
  switch (d) {
    case 1: s.rel_tol = 1e-10; break;
    case 2: s.rel_tol = 1e-7; break;
    case 3: s.rel_tol = 1e-5; break;
    default: throw UnsupportedDimension(d);
  }
  return s;
}

}  // namespace windsec::quad
