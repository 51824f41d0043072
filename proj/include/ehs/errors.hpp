#pragma once

#include <stdexcept>
#include <string>

namespace ehs {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Argument outside the domain of a function (E(0), |p| >= 1, 0^z with Re z <= 0).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A denominator factor vanished or fell below the pole threshold.
///
/// `where` names the symbol (e.g. "(aq/b;q,x)_lambda row 2") and `index`
/// the offending factor or term index, so the sampler can resample instead
/// of aborting a suite.
class PoleError : public Error {
 public:
  PoleError(std::string where, long index)
      : Error("pole at " + where + " [index " + std::to_string(index) + "]"),
        where_(std::move(where)),
        index_(index) {}

  const std::string& where() const noexcept { return where_; }
  long index() const noexcept { return index_; }

 private:
  std::string where_;
  long index_;
};

/// Parameters violate a balancing constraint that an identity requires.
class ConstraintError : public Error {
 public:
  using Error::Error;
};

/// The sampler could not produce a pole-free parameter set.
class SamplingError : public Error {
 public:
  using Error::Error;
};

/// Invalid configuration, flags or input file.
class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace ehs
