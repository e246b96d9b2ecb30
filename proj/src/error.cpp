#include "sl2vir/error.hpp"

namespace sl2vir {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::NotRepresentable: return "NotRepresentable";
    case ErrorKind::BadPolynomial: return "BadPolynomial";
    case ErrorKind::NotASubalgebra: return "NotASubalgebra";
    case ErrorKind::InvalidParameter: return "InvalidParameter";
    case ErrorKind::DepthExceeded: return "DepthExceeded";
    case ErrorKind::WrongAlgebra: return "WrongAlgebra";
    case ErrorKind::NotInSubalgebra: return "NotInSubalgebra";
    case ErrorKind::NotWeightModule: return "NotWeightModule";
  }
  return "Unknown";
}

}  // namespace sl2vir
