#pragma once

#include <stdexcept>

namespace corrdim {

// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Input could not be read.
struct IoError : Error { using Error::Error; };
// Output could not be written.
struct WriteError : Error { using Error::Error; };
// Text failed to parse as the expected format.
struct ParseError : Error { using Error::Error; };
// Structured document with missing required keys or unknown ones.
struct SchemaError : Error { using Error::Error; };
// Well-formed input violating a semantic rule (duplicate ids, dangling paths).
struct ValidationError : Error { using Error::Error; };
// Input too small or empty to be meaningful.
struct MalformedInputError : Error { using Error::Error; };
// Parameter outside its mathematical domain.
struct DomainError : Error { using Error::Error; };
// Sequence shorter than the operation requires.
struct LengthError : Error { using Error::Error; };
// Mismatched dimensions.
struct ShapeError : Error { using Error::Error; };
// Sequence not sorted as required.
struct OrderingError : Error { using Error::Error; };
// Configurable resource cap exceeded.
struct ResourceError : Error { using Error::Error; };
// Mixed configurations where uniformity is required.
struct ConsistencyError : Error { using Error::Error; };
// Too few observations for the requested statistic.
struct SampleSizeError : Error { using Error::Error; };
// Degenerate signal or fit (all-zero, constant, log of zero).
struct DegenerateError : Error { using Error::Error; };
// No admissible scaling region on the grid.
struct NoScalingRegionError : Error { using Error::Error; };
// Generated trajectory escaped.
struct DivergenceError : Error { using Error::Error; };

}  // namespace corrdim
