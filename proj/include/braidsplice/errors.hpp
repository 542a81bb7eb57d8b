#pragma once

#include <stdexcept>
#include <string>

namespace bsp {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

#define BSP_ERROR(Name)                                  \
  struct Name : Error {                                  \
    explicit Name(const std::string& what = #Name)       \
        : Error(what) {}                                 \
  }

BSP_ERROR(ZeroDenominator);
BSP_ERROR(PoleAtPoint);
BSP_ERROR(MissingVariable);
BSP_ERROR(ParseError);
BSP_ERROR(NotExact);
BSP_ERROR(PatternMismatch);
BSP_ERROR(NotOnVariety);
BSP_ERROR(NotInDBS);
BSP_ERROR(NotInChart);
BSP_ERROR(FrozenVertex);
BSP_ERROR(BruhatViolation);
BSP_ERROR(IncompleteFactorization);
BSP_ERROR(DimensionMismatch);
BSP_ERROR(PrincipalMismatch);

#undef BSP_ERROR

// index is 1-based, as in the minor Delta_{[i],[i]}
struct SingularPrincipalMinor : Error {
  int index;
  explicit SingularPrincipalMinor(int i)
      : Error("SingularPrincipalMinor(" + std::to_string(i) + ")"), index(i) {}
};

struct SingularChartMinor : Error {
  int index;
  explicit SingularChartMinor(int i)
      : Error("SingularChartMinor(" + std::to_string(i) + ")"), index(i) {}
};

}  // namespace bsp
