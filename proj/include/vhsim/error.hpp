#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace vhsim {

/// Base class for every failure raised by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct WeightSumViolation : Error {
  double actual_sum;
  explicit WeightSumViolation(double sum)
      : Error("criterion weights must sum to 1, got " + std::to_string(sum)),
        actual_sum(sum) {}
};

struct NonPositiveWeight : Error {
  explicit NonPositiveWeight(const std::string& name)
      : Error("criterion '" + name + "' has a non-positive weight") {}
};

struct NonPositiveValue : Error {
  explicit NonPositiveValue(const std::string& where)
      : Error("non-positive or non-finite value in " + where) {}
};

struct EmptyColumn : Error {
  EmptyColumn() : Error("cannot normalize an empty column") {}
};

struct DimensionMismatch : Error {
  explicit DimensionMismatch(const std::string& what) : Error(what) {}
};

struct DegenerateAlternative : Error {
  explicit DegenerateAlternative(const std::string& id)
      : Error("alternative '" + id +
              "' is equidistant-zero from both ideals; all alternatives are "
              "identical on every criterion") {}
};

struct EmptyCandidateSet : Error {
  EmptyCandidateSet() : Error("candidate set is empty") {}
};

struct EmptyList : Error {
  explicit EmptyList(const std::string& what) : Error(what + " is empty") {}
};

struct InvalidFloor : Error {
  explicit InvalidFloor(const std::string& criterion)
      : Error("floor profile is not strictly worse than the required profile "
              "on criterion '" + criterion + "'") {}
};

struct UnknownNetwork : Error {
  explicit UnknownNetwork(const std::string& id)
      : Error("no trust entry for network '" + id + "'") {}
};

struct EmptyLog : Error {
  explicit EmptyLog(const std::string& metric)
      : Error("event log carries no data for metric '" + metric + "'") {}
};

/// Parse failure in a matrix or scenario file; carries the 1-based line.
struct ParseError : Error {
  std::size_t line;
  ParseError(std::size_t line_no, const std::string& what)
      : Error("line " + std::to_string(line_no) + ": " + what), line(line_no) {}
};

/// Scenario validation failure; carries one diagnostic per offending field.
struct ConfigInvalid : Error {
  std::vector<std::string> diagnostics;
  explicit ConfigInvalid(std::vector<std::string> diags)
      : Error(join(diags)), diagnostics(std::move(diags)) {}

 private:
  static std::string join(const std::vector<std::string>& diags) {
    std::string out = "invalid scenario config:";
    for (const auto& d : diags) out += "\n  " + d;
    return out;
  }
};

}  // namespace vhsim
