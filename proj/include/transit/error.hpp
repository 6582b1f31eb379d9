#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "transit/subset.hpp"

namespace transit {

enum class ErrorCode {
  kCapacityExceeded,
  kEmptyGroundSet,
  kDuplicateLabel,
  kInvalidLabel,
  kUnknownLabel,
  kElementOutOfRange,
  kEmptyCluster,
  kGroundSetMismatch,
  kMissingPair,
  kDuplicatePair,
  kDiagonalEntry,
  kTransitAxiomViolated,  // (t1): u or v missing from R(u,v)
  kNoCover,               // no cluster contains the queried elements
  kNotUniqueMinimum,      // several incomparable inclusion-minimal covers
  kNotTSystem,
  kGroundSetTooLarge,
  kOutOfRange,
  kParse,
  kUnknownTag,
};

std::string_view to_string(ErrorCode code);

/// The single exception type thrown by the library. Carries the element
/// indices and clusters that demonstrate the problem, where there are any.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message, std::vector<std::size_t> elements = {},
        std::vector<Subset> sets = {})
      : std::runtime_error(message), code_(code), elements_(std::move(elements)), sets_(std::move(sets)) {}

  ErrorCode code() const { return code_; }
  const std::vector<std::size_t>& elements() const { return elements_; }
  const std::vector<Subset>& sets() const { return sets_; }

 private:
  ErrorCode code_;
  std::vector<std::size_t> elements_;
  std::vector<Subset> sets_;
};

}  // namespace transit
