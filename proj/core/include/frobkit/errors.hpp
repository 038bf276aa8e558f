#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace frobkit {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An exhaustive enumeration would exceed the configured element cap.
class EnumerationTooLarge : public Error {
 public:
  EnumerationTooLarge(std::uint64_t requested, std::uint64_t cap)
      : Error("enumeration of " + std::to_string(requested) +
              " elements exceeds cap " + std::to_string(cap)),
        requested_(requested),
        cap_(cap) {}

  std::uint64_t requested() const { return requested_; }
  std::uint64_t cap() const { return cap_; }

 private:
  std::uint64_t requested_;
  std::uint64_t cap_;
};

/// Malformed input: bad shape, element outside its shape, bad table size.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// A ring presentation failed validation. `witness` holds the basis
/// indices of the offending pair or triple.
class InvalidRing : public Error {
 public:
  enum class Kind { well_definedness, associativity, unit, characteristic, group_table };

  InvalidRing(Kind kind, std::vector<std::size_t> witness, const std::string& what)
      : Error(what), kind_(kind), witness_(std::move(witness)) {}

  Kind kind() const { return kind_; }
  const std::vector<std::size_t>& witness() const { return witness_; }

 private:
  Kind kind_;
  std::vector<std::size_t> witness_;
};

/// A skew quotient could not be formed (non-monic, one-sided ideal, f_0 not a unit).
class InvalidQuotient : public Error {
 public:
  using Error::Error;
};

class DegenerateForm : public Error {
 public:
  using Error::Error;
};

/// Left/right bookkeeping violation on codes.
class SideMismatch : public Error {
 public:
  using Error::Error;
};

/// An operation was invoked outside the shape it is defined for.
class Unsupported : public Error {
 public:
  using Error::Error;
};

/// A computed transform has no meaning for the given inputs (non-integral
/// or negative coefficients).
class NotApplicable : public Error {
 public:
  using Error::Error;
};

/// A postcondition the library re-verifies did not hold.
class InternalConsistency : public Error {
 public:
  using Error::Error;
};

}  // namespace frobkit
