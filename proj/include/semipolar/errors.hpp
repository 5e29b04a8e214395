#pragma once

#include <stdexcept>
#include <string>

namespace semipolar {

// Caller violated an operation's contract (mixed fields, malformed input,
// non-bijective maps, ...).
class UsageError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

// Argument outside the mathematical domain of an operation (inverse of zero,
// point at infinity of a non-affine line, ...).
class DomainError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

// A form, field or descriptor that cannot produce a supported polar space.
class ConfigurationError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// A horizon the complement construction refuses to work with.
class HorizonRefusal : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Internal consistency broke: a claimed bijection or partition does not hold.
class IntegrityError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

} // namespace semipolar
