#ifndef UALG_ERROR_HPP_
#define UALG_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace ualg {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct EntryOutOfRange : Error {
  using Error::Error;
};
struct ShapeMismatch : Error {
  using Error::Error;
};
struct NotACongruence : Error {
  using Error::Error;
};
struct NotClosed : Error {
  using Error::Error;
};
struct BadSandwich : Error {
  using Error::Error;
};
struct IndexOutOfRange : Error {
  using Error::Error;
};
struct LengthMismatch : Error {
  using Error::Error;
};
struct IncompatibleAlgebras : Error {
  using Error::Error;
};
struct NoOperations : Error {
  using Error::Error;
};
struct SizeTooSmall : Error {
  using Error::Error;
};
struct SizeTooLarge : Error {
  using Error::Error;
};
struct InvalidPartition : Error {
  using Error::Error;
};
struct ParseError : Error {
  using Error::Error;
};

}  // namespace ualg

#endif  // UALG_ERROR_HPP_
