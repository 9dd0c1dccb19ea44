#pragma once

#include <stdexcept>
#include <string>

namespace nfgmc {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

#define NFGMC_DEFINE_ERROR(Name) \
  struct Name : Error {          \
    using Error::Error;          \
  };

NFGMC_DEFINE_ERROR(InvalidAlphabet)
NFGMC_DEFINE_ERROR(NonRealSpectrum)
NFGMC_DEFINE_ERROR(LatticeTooSmall)
NFGMC_DEFINE_ERROR(IndexOutOfRange)
NFGMC_DEFINE_ERROR(AlphabetMismatch)
NFGMC_DEFINE_ERROR(OutOfSupport)
NFGMC_DEFINE_ERROR(DegenerateSpectrum)
NFGMC_DEFINE_ERROR(TooLargeForExact)
NFGMC_DEFINE_ERROR(TooLargeForTransfer)
NFGMC_DEFINE_ERROR(OddN)
NFGMC_DEFINE_ERROR(ZeroBeta)
NFGMC_DEFINE_ERROR(EmptySample)
NFGMC_DEFINE_ERROR(ConfigError)

#undef NFGMC_DEFINE_ERROR

}  // namespace nfgmc
