#pragma once

#include <stdexcept>
#include <string>

namespace profp {

/// Input text could not be parsed into an uncertain database.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid parameters: mining configuration, generator settings, CLI flags.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The brute-force oracle refuses instances beyond its enumeration budget.
/// An oracle must never approximate, so it bails out instead.
class OracleRefusal : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A structural invariant did not hold. Indicates a bug or misuse of the
/// library, not bad end-user input.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace profp
