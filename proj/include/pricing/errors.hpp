#pragma once

#include <stdexcept>
#include <string>

namespace pricing {

enum class Errc {
  // instance validation
  EmptyInstance,
  LengthMismatch,
  NonAscendingSupport,
  ProbSumNotOne,
  NonPositiveProb,
  NegativeValue,
  // evaluation
  DimensionMismatch,
  ValueNotInSupport,
  EnumerationTooLarge,
  // support-2 solver
  DegenerateInstance,
  SupportTooLarge,
  LimitMismatch,
  // exact oracles
  NonIntegerValues,
  GridTooLarge,
  // reductions
  OddSum,
  InvalidProbabilities,
  SectionMassNegative,
  PairProbOutOfRange,
  RemainderNegative,
  MultiplicityMismatch,
  // io / cli
  ParseError,
  UsageError,
  // internal invariant violation (e.g. an epsilon-squared term)
  Internal,
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace pricing
