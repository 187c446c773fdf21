#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace loopnet {

enum class Errc {
  RowNotPermutation,
  ColNotPermutation,
  NoUnit,
  EntryOutOfRange,
  BudgetExceeded,
  BadParameter,
  NotAGroup,
  NotAnSTS,
  NotDiassociative,
  IsAGroup,
  NotMoufang,
  PreconditionUnmet,
  MixedFields,
  EqualInputs,
  SingularCurve,
  PointNotOnCurve,
  NoSuchRoots,
  DegenerateParameters,
  CosetOverlap,
  NoValidBeta,
  DOrderTooSmall,
  UnsupportedPencil,
  SizeMismatch,
  IncidenceIncomplete,
  NotASubloop,
  ParseError,
};

std::string_view errc_name(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what, std::optional<int> index = std::nullopt)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code), index_(index) {}

  Errc code() const noexcept { return code_; }
  // Offending row/column/element when the error names one.
  std::optional<int> index() const noexcept { return index_; }

 private:
  Errc code_;
  std::optional<int> index_;
};

}  // namespace loopnet
