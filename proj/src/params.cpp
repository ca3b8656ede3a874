#include "linstab/params.hpp"

namespace linstab {

void ModelParams::validate() const {
  validate_or_throw(std::isfinite(m) && m >= 0.0, "m must be finite and >= 0");
  validate_or_throw(hbar > 0.0, "hbar must be > 0");
  validate_or_throw(lambda > 0.0, "lambda must be > 0");
  validate_or_throw(a > -4.0 * m * m, "a must exceed -4 m^2");
  validate_or_throw(lambda1 != 0.0 || lambda2 != 0.0,
                    "at least one of lambda1, lambda2 must be nonzero");
  validate_or_throw(g1 != 0.0 || g2 != 0.0,
                    "at least one of g1, g2 must be nonzero");
  if (m == 0.0)
    validate_or_throw(a > 0.0, "massless branch requires a > 0");
}

}  // namespace linstab
