#include "pricing/model.hpp"

#include <sstream>

#include "pricing/errors.hpp"

namespace pricing {

Rational parse_rational(const std::string& text) {
  auto bad = [&]() -> Rational { fail(Errc::ParseError, "not a rational: '" + text + "'"); };
  if (text.empty()) return bad();
  const auto slash = text.find('/');
  const std::string num_part = text.substr(0, slash == std::string::npos ? text.size() : slash);
  auto is_int = [](const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9') return false;
    return true;
  };
  if (!is_int(num_part)) return bad();
  Integer num(num_part);
  if (slash == std::string::npos) return Rational(num);
  const std::string den_part = text.substr(slash + 1);
  if (!is_int(den_part) || den_part[0] == '-' || den_part[0] == '+') return bad();
  Integer den(den_part);
  if (den <= 0) return bad();
  return Rational(num, den);
}

std::string to_string(const Rational& r) {
  std::ostringstream out;
  out << numerator(r);
  if (denominator(r) != 1) out << '/' << denominator(r);
  return out.str();
}

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::EmptyInstance: return "EmptyInstance";
    case Errc::LengthMismatch: return "LengthMismatch";
    case Errc::NonAscendingSupport: return "NonAscendingSupport";
    case Errc::ProbSumNotOne: return "ProbSumNotOne";
    case Errc::NonPositiveProb: return "NonPositiveProb";
    case Errc::NegativeValue: return "NegativeValue";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::ValueNotInSupport: return "ValueNotInSupport";
    case Errc::EnumerationTooLarge: return "EnumerationTooLarge";
    case Errc::DegenerateInstance: return "DegenerateInstance";
    case Errc::SupportTooLarge: return "SupportTooLarge";
    case Errc::LimitMismatch: return "LimitMismatch";
    case Errc::NonIntegerValues: return "NonIntegerValues";
    case Errc::GridTooLarge: return "GridTooLarge";
    case Errc::OddSum: return "OddSum";
    case Errc::InvalidProbabilities: return "InvalidProbabilities";
    case Errc::SectionMassNegative: return "SectionMassNegative";
    case Errc::PairProbOutOfRange: return "PairProbOutOfRange";
    case Errc::RemainderNegative: return "RemainderNegative";
    case Errc::MultiplicityMismatch: return "MultiplicityMismatch";
    case Errc::ParseError: return "ParseError";
    case Errc::UsageError: return "UsageError";
    case Errc::Internal: return "Internal";
  }
  return "Unknown";
}

PricingInstance validate_instance(PricingInstance raw) {
  if (raw.items.empty()) fail(Errc::EmptyInstance, "instance has no items");
  for (std::size_t i = 0; i < raw.items.size(); ++i) {
    const auto& item = raw.items[i];
    const std::string where = "item " + std::to_string(i + 1);
    if (item.values.empty()) fail(Errc::EmptyInstance, where + " has an empty support");
    if (item.values.size() != item.probs.size())
      fail(Errc::LengthMismatch, where + ": values and probs differ in length");
    Rational sum(0);
    for (std::size_t j = 0; j < item.values.size(); ++j) {
      if (item.values[j] < 0) fail(Errc::NegativeValue, where + ": negative support value");
      if (j > 0 && item.values[j] <= item.values[j - 1])
        fail(Errc::NonAscendingSupport, where + ": support values not strictly ascending");
      if (item.probs[j] <= 0) fail(Errc::NonPositiveProb, where + ": probability not positive");
      sum += item.probs[j];
    }
    if (sum != 1) fail(Errc::ProbSumNotOne, where + ": probabilities sum to " + to_string(sum));
  }
  return raw;
}

std::pair<PricingInstance, Rational> scale_to_integer(const PricingInstance& inst) {
  Integer factor(1);
  for (const auto& item : inst.items)
    for (const auto& v : item.values) factor = boost::multiprecision::lcm(factor, denominator(v));
  PricingInstance scaled = inst;
  if (factor != 1)
    for (auto& item : scaled.items)
      for (auto& v : item.values) v *= factor;
  return {std::move(scaled), Rational(factor)};
}

bool has_integer_values(const PricingInstance& inst) {
  for (const auto& item : inst.items)
    for (const auto& v : item.values)
      if (!is_integer(v)) return false;
  return true;
}

}  // namespace pricing
