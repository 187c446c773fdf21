#include "loopnet/error.hpp"

namespace loopnet {

std::string_view errc_name(Errc code) {
  switch (code) {
    case Errc::RowNotPermutation: return "RowNotPermutation";
    case Errc::ColNotPermutation: return "ColNotPermutation";
    case Errc::NoUnit: return "NoUnit";
    case Errc::EntryOutOfRange: return "EntryOutOfRange";
    case Errc::BudgetExceeded: return "BudgetExceeded";
    case Errc::BadParameter: return "BadParameter";
    case Errc::NotAGroup: return "NotAGroup";
    case Errc::NotAnSTS: return "NotAnSTS";
    case Errc::NotDiassociative: return "NotDiassociative";
    case Errc::IsAGroup: return "IsAGroup";
    case Errc::NotMoufang: return "NotMoufang";
    case Errc::PreconditionUnmet: return "PreconditionUnmet";
    case Errc::MixedFields: return "MixedFields";
    case Errc::EqualInputs: return "EqualInputs";
    case Errc::SingularCurve: return "SingularCurve";
    case Errc::PointNotOnCurve: return "PointNotOnCurve";
    case Errc::NoSuchRoots: return "NoSuchRoots";
    case Errc::DegenerateParameters: return "DegenerateParameters";
    case Errc::CosetOverlap: return "CosetOverlap";
    case Errc::NoValidBeta: return "NoValidBeta";
    case Errc::DOrderTooSmall: return "DOrderTooSmall";
    case Errc::UnsupportedPencil: return "UnsupportedPencil";
    case Errc::SizeMismatch: return "SizeMismatch";
    case Errc::IncidenceIncomplete: return "IncidenceIncomplete";
    case Errc::NotASubloop: return "NotASubloop";
    case Errc::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace loopnet
