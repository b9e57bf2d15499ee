#ifndef SFN_ERROR_HPP
#define SFN_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace sfn {

enum class Errc {
  // numfield
  NotMonic,
  NotSquarefree,
  DegreeZero,
  FieldMismatch,
  ZeroDivisor,
  Zero,
  // padic
  BadPrime,
  NotPrime,
  NotPIntegral,
  RingMismatch,
  BadPrecision,
  // series
  NonzeroConstant,
  BadConstantTerm,
  InnerHasConstant,
  NonUnitLinearTerm,
  NonUnitConstant,
  BadLinearPart,
  OrderMismatch,
  // sfunc
  ConstantTermNonzero,
  NotIntegral,
  // framing
  NotSymmetric,
  DimensionMismatch,
  // catalog
  DescentFailed,
  BadConductor,
  BadConstant,
  SmallPrime,
  // io / cli
  Parse,
  Usage,
};

constexpr std::string_view errc_name(Errc e) noexcept {
  switch (e) {
    case Errc::NotMonic: return "NotMonic";
    case Errc::NotSquarefree: return "NotSquarefree";
    case Errc::DegreeZero: return "DegreeZero";
    case Errc::FieldMismatch: return "FieldMismatch";
    case Errc::ZeroDivisor: return "ZeroDivisor";
    case Errc::Zero: return "Zero";
    case Errc::BadPrime: return "BadPrime";
    case Errc::NotPrime: return "NotPrime";
    case Errc::NotPIntegral: return "NotPIntegral";
    case Errc::RingMismatch: return "RingMismatch";
    case Errc::BadPrecision: return "BadPrecision";
    case Errc::NonzeroConstant: return "NonzeroConstant";
    case Errc::BadConstantTerm: return "BadConstantTerm";
    case Errc::InnerHasConstant: return "InnerHasConstant";
    case Errc::NonUnitLinearTerm: return "NonUnitLinearTerm";
    case Errc::NonUnitConstant: return "NonUnitConstant";
    case Errc::BadLinearPart: return "BadLinearPart";
    case Errc::OrderMismatch: return "OrderMismatch";
    case Errc::ConstantTermNonzero: return "ConstantTermNonzero";
    case Errc::NotIntegral: return "NotIntegral";
    case Errc::NotSymmetric: return "NotSymmetric";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::DescentFailed: return "DescentFailed";
    case Errc::BadConductor: return "BadConductor";
    case Errc::BadConstant: return "BadConstant";
    case Errc::SmallPrime: return "SmallPrime";
    case Errc::Parse: return "Parse";
    case Errc::Usage: return "Usage";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the codes above; the
/// CLI maps them to exit status 2.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace sfn

#endif  // SFN_ERROR_HPP
