#include "prm/error.hpp"

namespace prm {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::NonPrimeCharacteristic: return "NonPrimeCharacteristic";
    case Errc::OrderExceedsCap: return "OrderExceedsCap";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::FieldMismatch: return "FieldMismatch";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::ZeroPolynomial: return "ZeroPolynomial";
    case Errc::ZeroForm: return "ZeroForm";
    case Errc::DependentForms: return "DependentForms";
    case Errc::DegreeOutOfRange: return "DegreeOutOfRange";
    case Errc::LengthMismatch: return "LengthMismatch";
    case Errc::BudgetExceeded: return "BudgetExceeded";
    case Errc::BadIndex: return "BadIndex";
    case Errc::DomainViolation: return "DomainViolation";
    case Errc::NonSquareOrder: return "NonSquareOrder";
    case Errc::NoPassantFound: return "NoPassantFound";
    case Errc::PointOnConic: return "PointOnConic";
    case Errc::TooManyHyperplanes: return "TooManyHyperplanes";
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::Internal: return "Internal";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

}  // namespace prm
