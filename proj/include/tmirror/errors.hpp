#pragma once

#include <stdexcept>
#include <string>

namespace tmirror {

// Domain failures carry a stable machine-readable kind; the CLI maps them to exit code 1.
class DomainError : public std::runtime_error {
 public:
  DomainError(std::string kind, const std::string& what)
      : std::runtime_error(what), kind_(std::move(kind)) {}
  const std::string& kind() const { return kind_; }

 private:
  std::string kind_;
};

#define TMIRROR_ERROR(Name, Default)                                         \
  class Name : public DomainError {                                          \
   public:                                                                   \
    explicit Name(const std::string& what = Default) : DomainError(#Name, what) {} \
  };

TMIRROR_ERROR(SingularMatrix, "matrix is singular")
TMIRROR_ERROR(NotSymmetric, "matrix is not symmetric")
TMIRROR_ERROR(NotSkew, "matrix is not skew-symmetric")
TMIRROR_ERROR(Degenerate, "skew form is degenerate")
TMIRROR_ERROR(ShapeError, "matrix shapes do not match")
TMIRROR_ERROR(NotIntegral, "matrix is not integral")
TMIRROR_ERROR(NotComplexStructure, "J*J is not -1")
TMIRROR_ERROR(NotNSForm, "form is not a skew J-invariant form")
TMIRROR_ERROR(Block12Singular, "upper-right block is singular")
TMIRROR_ERROR(NotEven, "operator mixes parity")
TMIRROR_ERROR(NotSpin, "element is not in the spin group")
TMIRROR_ERROR(NoIntertwiner, "no intertwiner found")
TMIRROR_ERROR(MixedParity, "intertwiner is neither even nor odd")
TMIRROR_ERROR(NotIsotropic, "splitting is not Q-isotropic")
TMIRROR_ERROR(NotABasis, "vectors do not form a basis")
TMIRROR_ERROR(NoHardLefschetz, "hard Lefschetz fails")
TMIRROR_ERROR(FormMismatch, "alpha does not identify Q_A with Q_B")
TMIRROR_ERROR(IntertwineFailure, "alpha does not intertwine the complex structures")
TMIRROR_ERROR(NotInvariant, "splitting is not I_omega-invariant")
TMIRROR_ERROR(NotWellBecoming, "witness does not make the pair well-becoming")
TMIRROR_ERROR(TransversalityNotFound, "no transversal symplectic basis within budget")
TMIRROR_ERROR(DifferentSource, "certificates have different source pairs")
TMIRROR_ERROR(NotInvertible, "a + b*omega is not invertible")
TMIRROR_ERROR(NotFound, "search budget exhausted")
TMIRROR_ERROR(SizeLimit, "dimension exceeds the configured cap")

#undef TMIRROR_ERROR

}  // namespace tmirror
