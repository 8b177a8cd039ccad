#pragma once

#include <stdexcept>
#include <string>

namespace ptqm {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bad caller input: wrong shapes, out-of-range parameters.
class InputError : public Error {
 public:
  using Error::Error;
};

/// The numbers did not cooperate: defective matrices, exceptional points.
class NumericalError : public Error {
 public:
  using Error::Error;
};

#define PTQM_DEFINE_ERROR(Name, Base) \
  class Name : public Base {          \
   public:                            \
    using Base::Base;                 \
  }

PTQM_DEFINE_ERROR(DimensionMismatch, InputError);
PTQM_DEFINE_ERROR(NonFiniteInput, InputError);
PTQM_DEFINE_ERROR(InvalidMetric, InputError);
PTQM_DEFINE_ERROR(InvalidParams, InputError);
PTQM_DEFINE_ERROR(IndexOutOfRange, InputError);
PTQM_DEFINE_ERROR(NotHermitianInput, InputError);
PTQM_DEFINE_ERROR(NotPTSymmetric, InputError);
PTQM_DEFINE_ERROR(OutOfRegime, InputError);
PTQM_DEFINE_ERROR(PreconditionViolated, InputError);
PTQM_DEFINE_ERROR(PseudoHermiticityViolated, InputError);

PTQM_DEFINE_ERROR(NonDiagonalizable, NumericalError);
PTQM_DEFINE_ERROR(NotPositiveDefinite, NumericalError);
PTQM_DEFINE_ERROR(SelfOrthogonalEigenvector, NumericalError);
PTQM_DEFINE_ERROR(MetricNotPositive, NumericalError);
PTQM_DEFINE_ERROR(ComplexSpectrum, NumericalError);

PTQM_DEFINE_ERROR(ConvergenceFailure, NumericalError);

#undef PTQM_DEFINE_ERROR

}  // namespace ptqm
