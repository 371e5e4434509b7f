#pragma once

#include <stdexcept>
#include <string>

namespace locus {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define LOCUS_DEFINE_ERROR(Name)                                  \
  class Name : public Error {                                     \
   public:                                                        \
    explicit Name(const std::string& what) : Error(#Name ": " + what) {} \
  }

LOCUS_DEFINE_ERROR(DegenerateInput);
LOCUS_DEFINE_ERROR(NotConvex);
LOCUS_DEFINE_ERROR(CollinearSamples);
LOCUS_DEFINE_ERROR(PointOutside);
LOCUS_DEFINE_ERROR(WitnessOutside);
LOCUS_DEFINE_ERROR(NotDefinite);
LOCUS_DEFINE_ERROR(NonPositiveParameter);
LOCUS_DEFINE_ERROR(PointOutsideGrid);
LOCUS_DEFINE_ERROR(InvalidScene);

#undef LOCUS_DEFINE_ERROR

}  // namespace locus
