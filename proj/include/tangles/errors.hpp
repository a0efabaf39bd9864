#pragma once

#include <stdexcept>
#include <string>

namespace tangles {

// Base class for all domain errors raised by the library.  Anything that
// is a programming error (violated internal invariant) throws
// std::logic_error instead and is never part of the public contract.
class TangleError : public std::runtime_error {
public:
  explicit TangleError(const std::string& what) : std::runtime_error(what) {}
  virtual const char* name() const { return "TangleError"; }
};

// Product of slopes {infinity, 0}, which has no defined value.
class IndefiniteProduct : public TangleError {
public:
  IndefiniteProduct() : TangleError("indefinite product: infinity * 0") {}
  const char* name() const override { return "IndefiniteProduct"; }
};

// Raised when a sum is constructed with a rational-sequence summand of
// slope 0 or infinity.
class NonTrivialSumViolation : public TangleError {
public:
  explicit NonTrivialSumViolation(const std::string& what) : TangleError(what) {}
  const char* name() const override { return "NonTrivialSumViolation"; }
};

// Malformed expression text.  Positions are 1-based character offsets.
class ParseError : public TangleError {
public:
  ParseError(std::size_t position, std::string expected, std::string found)
      : TangleError("parse error at position " + std::to_string(position) +
                    ": expected " + expected + ", found " + found),
        position(position),
        expected(std::move(expected)),
        found(std::move(found)) {}

  std::size_t position;
  std::string expected;
  std::string found;
  const char* name() const override { return "ParseError"; }
};

// Operation requires a loop-free tangle.
class LoopPresent : public TangleError {
public:
  explicit LoopPresent(const std::string& what = "tangle has a loop component")
      : TangleError(what) {}
  const char* name() const override { return "LoopPresent"; }
};

// Surface computation on a tangle containing a closed sub-tangle.
class ClosedSubtangle : public TangleError {
public:
  explicit ClosedSubtangle(const std::string& what) : TangleError(what) {}
  const char* name() const override { return "ClosedSubtangle"; }
};

// No parallelism multiplier within the search bound yields a connected
// glued surface.
class Disconnected : public TangleError {
public:
  explicit Disconnected(const std::string& what) : TangleError(what) {}
  const char* name() const override { return "Disconnected"; }
};

class InvalidTemplate : public TangleError {
public:
  explicit InvalidTemplate(const std::string& what) : TangleError(what) {}
  const char* name() const override { return "InvalidTemplate"; }
};

class NotAlgebraicallyAlternating : public TangleError {
public:
  explicit NotAlgebraicallyAlternating(const std::string& what)
      : TangleError(what) {}
  const char* name() const override { return "NotAlgebraicallyAlternating"; }
};

class PreconditionViolated : public TangleError {
public:
  explicit PreconditionViolated(const std::string& what) : TangleError(what) {}
  const char* name() const override { return "PreconditionViolated"; }
};

// Resource guard for computations whose exact size depends on slope
// denominators (surface gluing, diagram expansion).
class ResourceLimit : public TangleError {
public:
  explicit ResourceLimit(const std::string& what) : TangleError(what) {}
  const char* name() const override { return "ResourceLimit"; }
};

}  // namespace tangles
