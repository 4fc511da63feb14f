#pragma once

#include <stdexcept>
#include <string>

namespace fixlab {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DomainMismatch : Error {
  using Error::Error;
};
struct OutOfRange : Error {
  using Error::Error;
};
struct InvalidParameter : Error {
  using Error::Error;
};
struct WrongFamily : Error {
  using Error::Error;
};
struct EmptySample : Error {
  using Error::Error;
};
struct AllDegenerate : Error {
  using Error::Error;
};
struct InsufficientTrace : Error {
  using Error::Error;
};
struct LoadError : Error {
  using Error::Error;
};

}  // namespace fixlab
