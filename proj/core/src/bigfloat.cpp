#include "eulerforge/bigfloat.hpp"

#include <cstdio>
#include <memory>

namespace eulerforge {

std::string BigFloat::str(int significant_digits) const {
  if (significant_digits < 2) significant_digits = 2;
  char* out = nullptr;
  // %Re prints one digit before the point, so digits-1 after it.
  int n = mpfr_asprintf(&out, "%.*Re", significant_digits - 1, v_);
  if (n < 0 || out == nullptr) return "<format-error>";
  std::string s(out);
  mpfr_free_str(out);
  return s;
}

}  // namespace eulerforge
