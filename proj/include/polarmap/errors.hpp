#ifndef POLARMAP_ERRORS_HPP
#define POLARMAP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace polarmap {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Bad input: wrong shape, out-of-range parameter, non-finite value.
struct ValidationError : Error {
  using Error::Error;
};

// A matrix required to be Hermitian is asymmetric beyond tolerance.
struct NonHermitianError : ValidationError {
  using ValidationError::ValidationError;
};

// A Choi/coherency/density matrix has an eigenvalue below -eps_psd.
struct UnphysicalError : ValidationError {
  using ValidationError::ValidationError;
};

// Zero-intensity beam or totally absorbed state: nothing to normalize.
struct ZeroIntensityError : Error {
  using Error::Error;
};

struct FileNotFoundError : Error {
  using Error::Error;
};

}  // namespace polarmap

#endif
