#ifndef SL2VIR_ERROR_HPP
#define SL2VIR_ERROR_HPP

#include <stdexcept>
#include <string>

namespace sl2vir {

enum class ErrorKind {
  DivisionByZero,
  NotRepresentable,
  BadPolynomial,
  NotASubalgebra,
  InvalidParameter,
  DepthExceeded,
  WrongAlgebra,
  NotInSubalgebra,
  NotWeightModule,
};

const char* to_string(ErrorKind kind);

// Every recoverable failure in the library is reported through this type.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace sl2vir

#endif
