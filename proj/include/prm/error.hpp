#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace prm {

enum class Errc {
  NonPrimeCharacteristic,
  OrderExceedsCap,
  DivisionByZero,
  FieldMismatch,
  DimensionMismatch,
  ZeroPolynomial,
  ZeroForm,
  DependentForms,
  DegreeOutOfRange,
  LengthMismatch,
  BudgetExceeded,
  BadIndex,
  DomainViolation,
  NonSquareOrder,
  NoPassantFound,
  PointOnConic,
  TooManyHyperplanes,
  InvalidArgument,
  Internal,
};

std::string_view to_string(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what);

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace prm
