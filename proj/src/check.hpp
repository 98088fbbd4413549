#pragma once

#include <cmath>
#include <string>

#include "gls/error.hpp"

namespace gls::detail {

inline void require_finite(const char* field, double value) {
  if (!std::isfinite(value)) throw InvalidParameter(field, "must be a finite number");
}

inline void require_fraction(const char* field, double value) {
  require_finite(field, value);
  if (value < 0.0 || value > 1.0)
    throw InvalidParameter(field, "must be in [0, 1], got " + std::to_string(value));
}

inline void require_non_negative(const char* field, double value) {
  require_finite(field, value);
  if (value < 0.0) throw InvalidParameter(field, "must be >= 0, got " + std::to_string(value));
}

inline void require_positive(const char* field, double value) {
  require_finite(field, value);
  if (value <= 0.0) throw InvalidParameter(field, "must be > 0, got " + std::to_string(value));
}

}  // namespace gls::detail
