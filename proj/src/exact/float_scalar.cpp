#include "solvspin/exact/float_scalar.hpp"

#include <cstdio>

namespace solvspin::exact {

std::string FloatScalar::to_string() const {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", value_);
  return buf;
}

}  // namespace solvspin::exact
