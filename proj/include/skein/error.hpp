#pragma once

#include <stdexcept>
#include <string>

namespace skein {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Exponent or index arithmetic left the int64 range.
class OverflowError : public Error {
public:
  using Error::Error;
};

// Surgery parameters outside the range an operation accepts.
class InvalidParams : public Error {
public:
  using Error::Error;
};

// Identity parameters violating the hypotheses of the identity.
class OutOfRange : public Error {
public:
  using Error::Error;
};

// A monomial with a negative Chebyshev degree reached a place that
// requires nonnegative support.
class NegativeSupport : public Error {
public:
  using Error::Error;
};

// A rewriting step failed its decreasing-measure check. Indicates a
// transcription bug in a relator, never expected in practice.
class NonTermination : public Error {
public:
  using Error::Error;
};

// An intermediate element grew past the configured term cap.
class TermLimitExceeded : public Error {
public:
  using Error::Error;
};

// Malformed JSON input.
class ParseError : public Error {
public:
  using Error::Error;
};

} // namespace skein
